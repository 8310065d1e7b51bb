#include "qeuler/cyclo.hpp"

#include "fraction.hpp"
#include "qeuler/errors.hpp"

#include <algorithm>
#include <string>

namespace qeuler {

namespace {

constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

// Reduces a vector indexed by exponents modulo p^m to the phi(p^m) basis.
// X^phi = -sum_{j<p-1} X^(j s) with s = p^(m-1); one downward pass suffices
// because every target index lies below phi.
void reduce_cyclic(const CycloRing& ring, std::vector<ZPoly>& t) {
    const std::size_t phi = ring.phi();
    if (ring.m == 0) {
        t.resize(1);
        return;
    }
    const std::size_t s = ring.order() / ring.p;
    for (std::size_t i = t.size(); i-- > phi;) {
        if (t[i].is_zero()) continue;
        const ZPoly c = std::move(t[i]);
        for (std::size_t j = 0; j + 1 < ring.p; ++j) t[i - phi + j * s] -= c;
    }
    t.resize(phi);
}

std::size_t exponent_mod(long e, std::size_t order) {
    const long o = static_cast<long>(order);
    return static_cast<std::size_t>(((e % o) + o) % o);
}

using RPoly = std::vector<RatFunc>;

void trim(RPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// a = quot * b + rem, b nonzero
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {RPoly{}, std::move(a)};
    RPoly quot(a.size() - db);
    const RatFunc inv_lc = b.back().inverse();
    for (std::size_t i = a.size(); i-- > db;) {
        if (a[i].is_zero()) continue;
        const RatFunc c = a[i] * inv_lc;
        for (std::size_t j = 0; j < db; ++j) a[i - db + j] -= c * b[j];
        a[i] = RatFunc();
        quot[i - db] = c;
    }
    trim(a);
    trim(quot);
    return {std::move(quot), std::move(a)};
}

RPoly sub_mul(const RPoly& a, const RPoly& q, const RPoly& b) {
    RPoly r = a;
    if (!q.empty() && !b.empty()) {
        r.resize(std::max(r.size(), q.size() + b.size() - 1));
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
        }
    }
    trim(r);
    return r;
}

}  // namespace

bool is_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

std::size_t CycloRing::order() const {
    std::size_t o = 1;
    for (std::uint32_t i = 0; i < m; ++i) o *= p;
    return o;
}

std::size_t CycloRing::phi() const { return m == 0 ? 1 : order() / p * (p - 1); }

void CycloRing::validate() const {
    if (!is_odd_prime(p)) throw ParameterError("p must be an odd prime, got " + std::to_string(p));
    std::size_t o = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        o *= p;
        if (o > kMaxOrder) {
            throw ParameterError("p^m too large for the cyclotomic ring (limit " + std::to_string(kMaxOrder) + ")");
        }
    }
}

QPoly phi_cyclotomic(std::uint32_t p, std::uint32_t m) {
    if (m == 0) throw ParameterError("phi_cyclotomic: level m must be >= 1 (m = 0 means zeta = 1)");
    const CycloRing ring{p, m};
    ring.validate();
    const std::size_t s = ring.order() / p;
    QPoly r;
    r.coeffs.assign(ring.phi() + 1, Rat(0));
    for (std::size_t j = 0; j < p; ++j) r.coeffs[j * s] = 1;
    return r;
}

// ---------------------------------------------------------------------------

CycloRF::CycloRF(CycloRing ring) : ring_(ring), nums_(ring.phi()), den_{1} {}

CycloRF CycloRF::constant(CycloRing ring, const RatFunc& c) {
    CycloRF r(ring);
    r.nums_[0] = c.num();
    r.den_ = c.den();
    return r;
}

CycloRF CycloRF::zeta(CycloRing ring, long e) {
    std::vector<ZPoly> t(ring.order());
    t[exponent_mod(e, ring.order())] = ZPoly{1};
    reduce_cyclic(ring, t);
    CycloRF r(ring);
    r.nums_ = std::move(t);
    return r;
}

CycloRF CycloRF::from_coeffs(CycloRing ring, const std::vector<RatFunc>& coeffs) {
    CycloRF r(ring);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        r += constant(ring, coeffs[j]).mul_zeta_power(static_cast<long>(j));
    }
    return r;
}

RatFunc CycloRF::coeff(std::size_t j) const { return RatFunc(nums_.at(j), den_); }

std::vector<RatFunc> CycloRF::coeffs() const {
    std::vector<RatFunc> r;
    r.reserve(nums_.size());
    for (std::size_t j = 0; j < nums_.size(); ++j) r.push_back(coeff(j));
    return r;
}

bool CycloRF::is_zero() const noexcept {
    return std::all_of(nums_.begin(), nums_.end(), [](const ZPoly& n) { return n.is_zero(); });
}

bool CycloRF::is_one() const {
    if (!den_.is_one() || !nums_[0].is_one()) return false;
    return std::all_of(nums_.begin() + 1, nums_.end(), [](const ZPoly& n) { return n.is_zero(); });
}

void CycloRF::require_same_ring(const CycloRF& o) const {
    if (!(ring_ == o.ring_)) {
        throw ParameterError("cyclotomic ring mismatch: (" + std::to_string(ring_.p) + "," +
                             std::to_string(ring_.m) + ") vs (" + std::to_string(o.ring_.p) + "," +
                             std::to_string(o.ring_.m) + ")");
    }
}

CycloRF CycloRF::operator-() const {
    CycloRF r = *this;
    for (auto& n : r.nums_) n = -n;
    return r;
}

CycloRF& CycloRF::operator+=(const CycloRF& o) {
    require_same_ring(o);
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        for (std::size_t j = 0; j < nums_.size(); ++j) nums_[j] += o.nums_[j];
        detail::canonicalize(nums_, den_);
        return *this;
    }
    // Henrici: only factors of gcd(den, o.den) can cancel.
    const ZPoly g = gcd(den_, o.den_);
    const ZPoly da = divexact(den_, g);
    const ZPoly db = divexact(o.den_, g);
    for (std::size_t j = 0; j < nums_.size(); ++j) {
        nums_[j] = nums_[j] * db + o.nums_[j] * da;
    }
    den_ = den_ * db;
    detail::canonicalize(nums_, den_, &g);
    return *this;
}

CycloRF& CycloRF::operator-=(const CycloRF& o) { return *this += -o; }

CycloRF& CycloRF::operator*=(const RatFunc& r) {
    if (r.is_zero() || is_zero()) return *this = CycloRF(ring_);
    // Cross cancellation is complete for a scalar factor.
    const ZPoly g1 = gcd(r.num(), den_);
    ZPoly g2 = r.den();
    for (const auto& n : nums_) {
        if (g2.is_constant()) break;
        if (!n.is_zero()) g2 = gcd(g2, n);
    }
    const ZPoly rn = g1.is_constant() ? r.num() : divexact(r.num(), g1);
    const ZPoly rd = g2.is_constant() ? r.den() : divexact(r.den(), g2);
    if (!g1.is_constant()) den_ = divexact(den_, g1);
    for (auto& n : nums_) {
        if (n.is_zero()) continue;
        if (!g2.is_constant()) n = divexact(n, g2);
        n = n * rn;
    }
    den_ = den_ * rd;
    detail::normalize_content(nums_, den_);
    return *this;
}

CycloRF& CycloRF::operator*=(const Int& c) {
    if (sgn(c) == 0) return *this = CycloRF(ring_);
    for (auto& n : nums_) n *= c;
    detail::normalize_content(nums_, den_);
    return *this;
}

CycloRF& CycloRF::operator*=(const CycloRF& o) {
    require_same_ring(o);
    if (is_zero() || o.is_zero()) return *this = CycloRF(ring_);
    const auto scalar = [](const CycloRF& x) {
        return std::all_of(x.nums_.begin() + 1, x.nums_.end(), [](const ZPoly& n) { return n.is_zero(); });
    };
    if (scalar(o)) return *this *= RatFunc(o.nums_[0], o.den_);
    if (scalar(*this)) {
        const RatFunc s(nums_[0], den_);
        *this = o;
        return *this *= s;
    }
    const std::size_t order = ring_.order();
    std::vector<ZPoly> t(order);
    for (std::size_t i = 0; i < nums_.size(); ++i) {
        if (nums_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.nums_.size(); ++j) {
            if (o.nums_[j].is_zero()) continue;
            t[(i + j) % order] += nums_[i] * o.nums_[j];
        }
    }
    reduce_cyclic(ring_, t);
    nums_ = std::move(t);
    den_ = den_ * o.den_;
    detail::canonicalize(nums_, den_);
    return *this;
}

CycloRF& CycloRF::mul_q_power(long k) {
    if (k == 0 || is_zero()) return *this;
    if (k > 0) {
        const auto kk = static_cast<std::size_t>(k);
        const std::size_t cancel = std::min(den_.q_valuation(), kk);
        den_ = den_.shifted_down(cancel);
        for (auto& n : nums_) n = n.shifted_up(kk - cancel);
    } else {
        const auto kk = static_cast<std::size_t>(-k);
        std::size_t v = kk;
        for (const auto& n : nums_) {
            if (!n.is_zero()) v = std::min(v, n.q_valuation());
        }
        for (auto& n : nums_) n = n.shifted_down(v);
        den_ = den_.shifted_up(kk - v);
    }
    return *this;
}

CycloRF& CycloRF::mul_zeta_power(long e) {
    if (ring_.m == 0) return *this;
    const std::size_t order = ring_.order();
    const std::size_t shift = exponent_mod(e, order);
    if (shift == 0) return *this;
    std::vector<ZPoly> t(order);
    for (std::size_t j = 0; j < nums_.size(); ++j) t[(j + shift) % order] = std::move(nums_[j]);
    reduce_cyclic(ring_, t);
    nums_ = std::move(t);
    return *this;
}

CycloRF CycloRF::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero cyclotomic element");
    const RatFunc den_factor(den_);
    if (ring_.m == 0) return constant(ring_, RatFunc(nums_[0]).inverse() * den_factor);

    // Extended Euclid on (Phi, A) where this = A / den.
    RPoly r0;
    for (const auto& c : phi_cyclotomic(ring_.p, ring_.m).coeffs) r0.emplace_back(c);
    RPoly r1;
    for (const auto& n : nums_) r1.emplace_back(n);
    trim(r1);
    RPoly t0;
    RPoly t1{RatFunc(1)};
    while (r1.size() > 1) {
        auto [quot, rem] = divmod(r0, r1);
        if (rem.empty()) throw std::logic_error("cyclo_inv: zero divisor modulo the cyclotomic polynomial");
        RPoly t2 = sub_mul(t0, quot, t1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const RatFunc scale = den_factor / r1[0];
    for (auto& c : t1) c *= scale;
    return from_coeffs(ring_, t1);
}

CycloRF CycloRF::zeta_conj() const {
    if (ring_.m == 0) return *this;
    const std::size_t order = ring_.order();
    std::vector<ZPoly> t(order);
    for (std::size_t j = 0; j < nums_.size(); ++j) t[(order - j) % order] = nums_[j];
    reduce_cyclic(ring_, t);
    CycloRF r(ring_);
    r.nums_ = std::move(t);
    r.den_ = den_;
    return r;
}

CycloRF CycloRF::subst_q_inverse() const {
    CycloRF r = *this;
    if (r.is_zero()) return r;
    detail::substitute_q_inverse(r.nums_, r.den_);
    return r;
}

CycloRF CycloRF::eval_at_q(const Rat& x) const {
    const Rat d = den_.eval(x);
    std::vector<RatFunc> values;
    values.reserve(nums_.size());
    for (std::size_t j = 0; j < nums_.size(); ++j) {
        if (sgn(d) != 0) {
            values.emplace_back(Rat(nums_[j].eval(x) / d));
            continue;
        }
        const RatFunc c = coeff(j);
        if (sgn(c.den().eval(x)) == 0) {
            throw PoleError("pole at q = " + x.get_str() + " in coefficient of zeta^" + std::to_string(j));
        }
        values.emplace_back(c.eval(x));
    }
    return from_coeffs(ring_, values);
}

}  // namespace qeuler

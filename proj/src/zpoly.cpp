#include "qeuler/zpoly.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qeuler {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Arithmetic modulo word-size primes (used by the modular gcd)

struct ModP {
    u64 p;

    u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

u64 prime_at(std::size_t i) {
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard lock(mu);
    Int cand = (Int(1) << 62) - 1;
    if (!primes.empty()) cand = Int(static_cast<unsigned long>(primes.back())) - 2;
    while (primes.size() <= i) {
        if (mpz_probab_prime_p(cand.get_mpz_t(), 30) > 0) primes.push_back(cand.get_ui());
        cand -= 2;
    }
    return primes[i];
}

std::vector<u64> reduce_mod(const ZPoly& a, const ModP& m) {
    std::vector<u64> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), m.p);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// a <- a mod b, b nonzero
void rem_mod(std::vector<u64>& a, const std::vector<u64>& b, const ModP& m) {
    const std::size_t db = b.size() - 1;
    const u64 inv_lc = m.inv(b.back());
    while (a.size() >= b.size()) {
        const std::size_t top = a.size() - 1;
        const u64 c = m.mul(a[top], inv_lc);
        if (c != 0) {
            const std::size_t off = top - db;
            for (std::size_t j = 0; j < db; ++j) {
                a[off + j] = m.sub(a[off + j], m.mul(c, b[j]));
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
}

std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, const ModP& m) {
    while (!b.empty()) {
        rem_mod(a, b, m);
        std::swap(a, b);
    }
    if (!a.empty()) {
        const u64 inv_lc = m.inv(a.back());
        for (auto& c : a) c = m.mul(c, inv_lc);
    }
    return a;
}

ZPoly primitive_positive(const ZPoly& a) {
    ZPoly r = a;
    const Int c = r.content();
    if (c != 1) r.divexact(c);
    if (sgn(r.lc()) < 0) r = -r;
    return r;
}

// gcd of two primitive polynomials, neither divisible by q, both of degree >= 1.
ZPoly modular_gcd(const ZPoly& a, const ZPoly& b) {
    const Int ell = gcd(a.lc(), b.lc());
    std::vector<Int> acc;
    Int modulus;
    long best = std::min(a.degree(), b.degree()) + 1;
    constexpr std::size_t max_primes = 100000;

    for (std::size_t i = 0; i < max_primes; ++i) {
        const ModP m{prime_at(i)};
        if (mpz_fdiv_ui(a.lc().get_mpz_t(), m.p) == 0 || mpz_fdiv_ui(b.lc().get_mpz_t(), m.p) == 0) {
            continue;
        }
        auto g = gcd_mod(reduce_mod(a, m), reduce_mod(b, m), m);
        const long dg = static_cast<long>(g.size()) - 1;
        if (dg == 0) return ZPoly{1};
        if (dg > best) continue;  // unlucky prime
        const u64 scale = mpz_fdiv_ui(ell.get_mpz_t(), m.p);
        for (auto& c : g) c = m.mul(c, scale);

        bool stable = true;
        if (dg < best) {
            best = dg;
            acc.assign(g.size(), Int());
            for (std::size_t j = 0; j < g.size(); ++j) acc[j] = static_cast<unsigned long>(g[j]);
            modulus = static_cast<unsigned long>(m.p);
            stable = false;
        } else {
            const u64 minv = m.inv(mpz_fdiv_ui(modulus.get_mpz_t(), m.p));
            Int t;
            for (std::size_t j = 0; j < g.size(); ++j) {
                const u64 h = mpz_fdiv_ui(acc[j].get_mpz_t(), m.p);
                const u64 d = m.mul(m.sub(g[j], h), minv);
                if (d != 0) {
                    stable = false;
                    t = static_cast<unsigned long>(d);
                    acc[j] += modulus * t;
                }
            }
            modulus *= static_cast<unsigned long>(m.p);
        }
        // Symmetric residues, so that a stable lift means an unchanged integer.
        const Int half = modulus / 2;
        for (auto& c : acc) {
            if (c > half) c -= modulus;
        }
        if (!stable) continue;

        ZPoly cand = primitive_positive(ZPoly(acc));
        if (divide_exact(a, cand) && divide_exact(b, cand)) return cand;
    }
    throw std::logic_error("modular gcd did not converge");
}

// ---------------------------------------------------------------------------
// Kronecker substitution multiplication

std::size_t max_bits(const ZPoly& a) {
    std::size_t b = 0;
    for (const auto& c : a.coeffs()) {
        if (sgn(c) != 0) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    return b;
}

// Packs the coefficients into limb-aligned slots of width `slot` limbs,
// returning sum c_i * 2^(i * slot * GMP_NUMB_BITS) as a signed integer.
Int pack(const ZPoly& a, std::size_t slot) {
    const std::size_t total = slot * a.size();
    std::vector<mp_limb_t> pos(total, 0), neg(total, 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const mpz_srcptr z = a[i].get_mpz_t();
        const std::size_t n = mpz_size(z);
        if (n == 0) continue;
        auto& dst = mpz_sgn(z) > 0 ? pos : neg;
        any_neg |= mpz_sgn(z) < 0;
        std::memcpy(dst.data() + i * slot, mpz_limbs_read(z), n * sizeof(mp_limb_t));
    }
    Int r;
    auto load = [total](Int& out, const std::vector<mp_limb_t>& limbs) {
        mp_limb_t* w = mpz_limbs_write(out.get_mpz_t(), static_cast<mp_size_t>(total));
        std::memcpy(w, limbs.data(), total * sizeof(mp_limb_t));
        mpz_limbs_finish(out.get_mpz_t(), static_cast<mp_size_t>(total));
    };
    load(r, pos);
    if (any_neg) {
        Int n;
        load(n, neg);
        r -= n;
    }
    return r;
}

std::vector<Int> unpack(const Int& v, std::size_t slot, std::size_t count) {
    std::vector<Int> out(count);
    const int sign = sgn(v);
    if (sign == 0) return out;
    const mpz_srcptr z = v.get_mpz_t();
    const std::size_t n = mpz_size(z);
    const mp_limb_t* limbs = mpz_limbs_read(z);
    const std::size_t slot_bits = slot * GMP_NUMB_BITS;
    bool carry = false;
    Int half = Int(1) << (slot_bits - 1);
    Int full = Int(1) << slot_bits;
    for (std::size_t i = 0; i < count; ++i) {
        Int& c = out[i];
        const std::size_t lo = i * slot;
        if (lo < n) {
            const std::size_t len = std::min(slot, n - lo);
            mp_limb_t* w = mpz_limbs_write(c.get_mpz_t(), static_cast<mp_size_t>(len));
            std::memcpy(w, limbs + lo, len * sizeof(mp_limb_t));
            mpz_limbs_finish(c.get_mpz_t(), static_cast<mp_size_t>(len));
        }
        if (carry) c += 1;
        carry = c >= half;
        if (carry) c -= full;
        if (sign < 0) c = -c;
    }
    return out;
}

ZPoly mul_schoolbook(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return ZPoly(std::move(r));
}

ZPoly mul_kronecker(const ZPoly& a, const ZPoly& b) {
    const std::size_t n = std::min(a.size(), b.size());
    const std::size_t bits = max_bits(a) + max_bits(b) + std::bit_width(n) + 2;
    const std::size_t slot = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
    const Int prod = pack(a, slot) * pack(b, slot);
    return ZPoly(unpack(prod, slot, a.size() + b.size() - 1));
}

}  // namespace

// ---------------------------------------------------------------------------

ZPoly::ZPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long c : coeffs) c_.emplace_back(c);
    trim();
}

ZPoly ZPoly::constant(const Int& c) { return ZPoly(std::vector<Int>{c}); }

ZPoly ZPoly::monomial(const Int& c, std::size_t deg) {
    if (sgn(c) == 0) return {};
    std::vector<Int> v(deg + 1);
    v[deg] = c;
    return ZPoly(std::move(v));
}

bool ZPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

Int ZPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }

void ZPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

std::size_t ZPoly::q_valuation() const {
    std::size_t k = 0;
    while (k < c_.size() && sgn(c_[k]) == 0) ++k;
    return k == c_.size() ? 0 : k;
}

ZPoly ZPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    ZPoly r;
    r.c_.resize(c_.size() + k);
    std::copy(c_.begin(), c_.end(), r.c_.begin() + static_cast<long>(k));
    return r;
}

ZPoly ZPoly::shifted_down(std::size_t k) const {
    if (k == 0) return *this;
    if (k > q_valuation() && !is_zero()) throw std::logic_error("shifted_down: not divisible by q^k");
    ZPoly r;
    if (k < c_.size()) r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
    return r;
}

ZPoly ZPoly::reversed(std::size_t len) const {
    if (is_zero()) return {};
    if (len < c_.size()) throw std::logic_error("reversed: length below size");
    std::vector<Int> v(len);
    for (std::size_t i = 0; i < c_.size(); ++i) v[len - 1 - i] = c_[i];
    return ZPoly(std::move(v));
}

Int ZPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly& ZPoly::divexact(const Int& c) {
    for (auto& x : c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return *this;
}

ZPoly& ZPoly::operator*=(const Int& c) {
    if (sgn(c) == 0) {
        c_.clear();
    } else {
        for (auto& x : c_) x *= c;
    }
    return *this;
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

void ZPoly::add_scaled(const ZPoly& o, const Int& c, std::size_t shift) {
    if (o.is_zero() || sgn(c) == 0) return;
    if (o.c_.size() + shift > c_.size()) c_.resize(o.c_.size() + shift);
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        mpz_addmul(c_[i + shift].get_mpz_t(), o.c_[i].get_mpz_t(), c.get_mpz_t());
    }
    trim();
}

Rat ZPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

std::uint64_t ZPoly::eval_mod(std::uint64_t x, std::uint64_t modulus) const {
    const ModP m{modulus};
    x %= modulus;
    u64 r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = m.add(m.mul(r, x), mpz_fdiv_ui(it->get_mpz_t(), modulus));
    }
    return r;
}

ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
ZPoly operator*(ZPoly a, const Int& c) { return a *= c; }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b * a[0];
    if (b.size() == 1) return a * b[0];
    if (std::min(a.size(), b.size()) < 6) return mul_schoolbook(a, b);
    return mul_kronecker(a, b);
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return b.is_zero() ? ZPoly{} : primitive_positive(b);
    if (b.is_zero()) return primitive_positive(a);
    if (a.is_constant() || b.is_constant()) return ZPoly{1};

    const std::size_t va = a.q_valuation();
    const std::size_t vb = b.q_valuation();
    const std::size_t v = std::min(va, vb);
    const ZPoly ra = primitive_positive(a.shifted_down(va));
    const ZPoly rb = primitive_positive(b.shifted_down(vb));
    const ZPoly qpow = ZPoly::monomial(1, v);
    if (ra.is_constant() || rb.is_constant()) return qpow;
    if (ra == rb) return ra.shifted_up(v);
    if (ra.is_one() || rb.is_one()) return qpow;
    return modular_gcd(ra, rb).shifted_up(v);
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return ZPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    if (b.is_constant()) {
        for (const auto& c : a.coeffs()) {
            if (!mpz_divisible_p(c.get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;
        }
        ZPoly r = a;
        return r.divexact(b[0]);
    }
    // Cheap necessary condition on the constant terms.
    if (sgn(b[0]) != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) return std::nullopt;

    std::vector<Int> r(a.coeffs().begin(), a.coeffs().end());
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const std::size_t dq = static_cast<std::size_t>(a.degree()) - db;
    std::vector<Int> quot(dq + 1);
    const mpz_srcptr lcb = b.lc().get_mpz_t();
    for (std::size_t k = dq + 1; k-- > 0;) {
        Int& top = r[k + db];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lcb)) return std::nullopt;
        Int& c = quot[k];
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lcb);
        for (std::size_t j = 0; j < db; ++j) {
            mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
        }
        top = 0;
    }
    for (std::size_t j = 0; j < db; ++j) {
        if (sgn(r[j]) != 0) return std::nullopt;
    }
    return ZPoly(std::move(quot));
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    auto r = divide_exact(a, b);
    if (!r) throw std::logic_error("divexact: polynomial division is not exact");
    return std::move(*r);
}

QPoly to_qpoly(const ZPoly& p, const Int& d) {
    QPoly r;
    r.coeffs.reserve(p.size());
    for (const auto& c : p.coeffs()) {
        Rat x(c, d);
        x.canonicalize();
        r.coeffs.push_back(std::move(x));
    }
    return r;
}

std::pair<ZPoly, Int> clear_denominators(const QPoly& p) {
    Int d = 1;
    for (const auto& c : p.coeffs) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> z;
    z.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) z.push_back(c.get_num() * (d / c.get_den()));
    return {ZPoly(std::move(z)), d};
}

}  // namespace qeuler

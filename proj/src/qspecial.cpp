#include "qeuler/qspecial.hpp"

#include "qeuler/errors.hpp"

#include <string>

namespace qeuler {

namespace {

void require_params(const EulerParams& params, const EulerCache& cache) {
    if (!(params == cache.params())) throw ParameterError("EulerCache belongs to different parameters");
}

// 1 + q^a zeta
CycloRF twist(CycloRing ring, long a) {
    return CycloRF::one(ring) + CycloRF::zeta(ring).mul_q_power(a);
}

// [2]_q / (1-q)^n
RatFunc closed_prefactor(std::size_t n) {
    return RatFunc(ZPoly{1, 1}) / RatFunc(ZPoly{1, -1}).pow(static_cast<long>(n));
}

CycloRF closed_sum(std::size_t n, long x, const EulerParams& params, auto&& inverse_of_twist) {
    CycloRF sum(params.ring());
    for (std::size_t l = 0; l <= n; ++l) {
        CycloRF term = inverse_of_twist(params.h + static_cast<long>(l));
        term.mul_q_power(static_cast<long>(l) * x);
        Int c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
        if (l % 2) c = -c;
        term *= c;
        sum += term;
    }
    return sum * closed_prefactor(n);
}

}  // namespace

Int binomial(unsigned n, unsigned k) {
    static std::mutex mu;
    static std::vector<std::vector<Int>> rows{{Int(1)}};
    if (k > n) return 0;
    std::lock_guard lock(mu);
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        std::vector<Int> row(prev.size() + 1);
        row.front() = 1;
        row.back() = 1;
        for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

RatFunc q_number(long x) {
    if (x == 0) return RatFunc();
    const auto k = static_cast<std::size_t>(x > 0 ? x : -x);
    std::vector<Int> ones(k, Int(1));
    if (x > 0) return RatFunc(ZPoly(std::move(ones)));
    // [-k]_q = -q^-k [k]_q
    return RatFunc(-ZPoly(std::move(ones)), ZPoly::monomial(1, k));
}

RatFunc q_number_inv_arg(long y) { return q_number(y).subst_q_inverse(); }

RatFunc bernstein(unsigned k, unsigned n, long x) {
    if (k > n) {
        throw ParameterError("bernstein: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
    }
    return RatFunc(binomial(n, k)) * q_number(x).pow(k) * q_number_inv_arg(1 - x).pow(n - k);
}

MomentPoly& MomentPoly::operator*=(const MomentPoly& o) {
    if (coeffs.empty() || o.coeffs.empty()) {
        coeffs.clear();
        return *this;
    }
    std::vector<Rat> r(coeffs.size() + o.coeffs.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) r[i + j] += coeffs[i] * o.coeffs[j];
    }
    coeffs = std::move(r);
    return *this;
}

MomentPoly bernstein_moment_poly(unsigned k, unsigned n) {
    if (k > n) {
        throw ParameterError("bernstein_moment_poly: k = " + std::to_string(k) + " exceeds n = " +
                             std::to_string(n));
    }
    MomentPoly mp;
    mp.coeffs.assign(n + 1, Rat(0));
    const Int lead = binomial(n, k);
    for (unsigned l = 0; l <= n - k; ++l) {
        Int c = lead * binomial(n - k, l);
        if (l % 2) c = -c;
        mp.coeffs[k + l] = c;
    }
    return mp;
}

// ---------------------------------------------------------------------------

EulerCache::EulerCache(EulerParams params) : params_(params) { params_.validate(); }

std::size_t EulerCache::size() const {
    std::lock_guard lock(mu_);
    return values_.size();
}

const CycloRF& EulerCache::twist_inverse(long a) {
    std::lock_guard lock(mu_);
    return twist_inverse_locked(a);
}

const CycloRF& EulerCache::twist_inverse_locked(long a) {
    auto it = twist_inv_.find(a);
    if (it == twist_inv_.end()) it = twist_inv_.emplace(a, twist(ring(), a).inverse()).first;
    return it->second;
}

const CycloRF& EulerCache::number(std::size_t n) {
    std::lock_guard lock(mu_);
    return number_locked(n);
}

const CycloRF& EulerCache::number_locked(std::size_t n) {
    const CycloRing r = ring();
    const long h = params_.h;
    while (values_.size() <= n) {
        const std::size_t k = values_.size();
        if (k == 0) {
            values_.push_back(twist_inverse_locked(h) * RatFunc(ZPoly{1, 1}));
            continue;
        }
        // Isolate the l = k term of q^h zeta sum_l C(k,l) q^l E_l + E_k = 0.
        CycloRF sum(r);
        for (std::size_t l = 0; l < k; ++l) {
            CycloRF term = values_[l];
            term.mul_q_power(static_cast<long>(l));
            term *= binomial(static_cast<unsigned>(k), static_cast<unsigned>(l));
            sum += term;
        }
        sum.mul_q_power(h).mul_zeta_power(1);
        sum *= twist_inverse_locked(h + static_cast<long>(k));
        values_.push_back(-sum);
    }
    return values_[n];
}

const CycloRF& EulerCache::reflected_number(std::size_t n) {
    std::lock_guard lock(mu_);
    while (reflected_.size() <= n) {
        reflected_.push_back(number_locked(reflected_.size()).zeta_conj().subst_q_inverse());
    }
    return reflected_[n];
}

CycloRF euler_number(std::size_t n, const EulerParams& params, EulerCache& cache) {
    require_params(params, cache);
    return cache.number(n);
}

CycloRF euler_number_closed(std::size_t n, const EulerParams& params) {
    return euler_poly_closed(n, 0, params);
}

CycloRF euler_number_closed(std::size_t n, EulerCache& cache) { return euler_poly_closed(n, 0, cache); }

CycloRF euler_poly(std::size_t n, long x, const EulerParams& params, EulerCache& cache) {
    require_params(params, cache);
    if (x == 0) return cache.number(n);
    const RatFunc qx = q_number(x);
    CycloRF sum(params.ring());
    for (std::size_t l = 0; l <= n; ++l) {
        CycloRF term = cache.number(l);
        term.mul_q_power(static_cast<long>(l) * x);
        term *= qx.pow(static_cast<long>(n - l)) * RatFunc(binomial(static_cast<unsigned>(n), static_cast<unsigned>(l)));
        sum += term;
    }
    return sum;
}

CycloRF euler_poly_closed(std::size_t n, long x, const EulerParams& params) {
    params.validate();
    const CycloRing ring = params.ring();
    return closed_sum(n, x, params, [&](long a) { return twist(ring, a).inverse(); });
}

CycloRF euler_poly_closed(std::size_t n, long x, EulerCache& cache) {
    return closed_sum(n, x, cache.params(), [&](long a) { return cache.twist_inverse(a); });
}

CycloRF reflected_euler_poly(std::size_t n, long x, EulerCache& cache) {
    return euler_poly(n, x, cache.params(), cache).zeta_conj().subst_q_inverse();
}

CycloRF integrate_moments(const MomentPoly& mp, const EulerParams& params, EulerCache& cache) {
    require_params(params, cache);
    CycloRF sum(params.ring());
    for (std::size_t j = mp.coeffs.size(); j-- > 0;) {
        if (sgn(mp.coeffs[j]) == 0) continue;
        sum += cache.number(j) * RatFunc(mp.coeffs[j]);
    }
    return sum;
}

CycloRF integral_reflected_power(std::size_t n, const EulerParams& params, EulerCache& cache) {
    // [1-x]_{q^-1}^n = (1 - t)^n = B_{0,n}
    return integrate_moments(bernstein_moment_poly(0, static_cast<unsigned>(n)), params, cache);
}

CycloRF integral_reflected_power_closed(std::size_t n, const EulerParams& params, EulerCache& cache) {
    require_params(params, cache);
    if (n == 0) throw ParameterError("integral_reflected_power_closed requires n >= 1");
    CycloRF r = cache.reflected_number(n);
    r.mul_q_power(params.h + 1).mul_zeta_power(1);
    return r + CycloRF::constant(params.ring(), RatFunc(ZPoly{1, 1}));
}

}  // namespace qeuler

#pragma once

// q-numbers, Kim-type q-Bernstein polynomials and the twisted (h, q)-Euler
// numbers and polynomials E^(h)_{n,q,zeta}(x), with x restricted to integers
// so that every value is an exact element of CycloRF.

#include "qeuler/cyclo.hpp"
#include "qeuler/ratfunc.hpp"

#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <mutex>
#include <vector>

namespace qeuler {

/// (p, m, h): zeta has order p^m, h is the integer weight.
struct EulerParams {
    std::uint32_t p = 3;
    std::uint32_t m = 1;
    long h = 1;

    CycloRing ring() const { return {p, m}; }
    void validate() const { ring().validate(); }

    friend auto operator<=>(const EulerParams&, const EulerParams&) = default;
};

/// C(n, k) from a shared Pascal triangle; 0 when k > n.
Int binomial(unsigned n, unsigned k);

/// [x]_q = (1 - q^x) / (1 - q) for any integer x.
RatFunc q_number(long x);
/// [y]_{q^-1}.
RatFunc q_number_inv_arg(long y);

/// B_{k,n}(x, q) = C(n,k) [x]_q^k [1-x]_{q^-1}^(n-k). Throws ParameterError if k > n.
RatFunc bernstein(unsigned k, unsigned n, long x);

/// A polynomial in the moment variable t = [x]_q. The integrand it stands
/// for is sum_j coeffs[j] [x]_q^j q^((h-1)x) zeta^x, whose fermionic integral
/// is sum_j coeffs[j] E_j.
struct MomentPoly {
    std::vector<Rat> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    MomentPoly& operator*=(const MomentPoly& o);
    friend MomentPoly operator*(MomentPoly a, const MomentPoly& b) { return a *= b; }
    friend bool operator==(const MomentPoly&, const MomentPoly&) = default;
};

/// C(n,k) t^k (1-t)^(n-k), using [1-x]_{q^-1} = 1 - [x]_q.
MomentPoly bernstein_moment_poly(unsigned k, unsigned n);

/// Memoised E^(h)_{n,q,zeta} for one parameter point, together with the
/// (q^-1, zeta^-1) family and the inverses of 1 + q^a zeta. Extension is
/// serialised by an internal mutex; returned references stay valid for the
/// lifetime of the cache.
class EulerCache {
public:
    explicit EulerCache(EulerParams params);

    const EulerParams& params() const noexcept { return params_; }
    CycloRing ring() const { return params_.ring(); }

    /// E_n from the recurrence q^h zeta (q E + 1)^n + E_n = 0.
    const CycloRF& number(std::size_t n);
    /// E^(h)_{n,q^-1,zeta^-1}, by applying both automorphisms to number(n).
    const CycloRF& reflected_number(std::size_t n);
    /// (1 + q^a zeta)^-1.
    const CycloRF& twist_inverse(long a);

    std::size_t size() const;

private:
    const CycloRF& number_locked(std::size_t n);
    const CycloRF& twist_inverse_locked(long a);

    EulerParams params_;
    mutable std::mutex mu_;
    std::deque<CycloRF> values_;
    std::deque<CycloRF> reflected_;
    std::map<long, CycloRF> twist_inv_;
};

CycloRF euler_number(std::size_t n, const EulerParams& params, EulerCache& cache);
/// [2]_q/(1-q)^n sum_l C(n,l)(-1)^l / (1 + q^(h+l) zeta)
CycloRF euler_number_closed(std::size_t n, const EulerParams& params);
CycloRF euler_number_closed(std::size_t n, EulerCache& cache);

/// sum_l C(n,l) [x]_q^(n-l) q^(lx) E_l
CycloRF euler_poly(std::size_t n, long x, const EulerParams& params, EulerCache& cache);
/// [2]_q/(1-q)^n sum_l C(n,l)(-1)^l q^(lx) / (1 + q^(h+l) zeta)
CycloRF euler_poly_closed(std::size_t n, long x, const EulerParams& params);
CycloRF euler_poly_closed(std::size_t n, long x, EulerCache& cache);
/// E^(h)_{n,q^-1,zeta^-1}(x)
CycloRF reflected_euler_poly(std::size_t n, long x, EulerCache& cache);

/// sum_j c_j E_j
CycloRF integrate_moments(const MomentPoly& mp, const EulerParams& params, EulerCache& cache);

/// Integral of [1-x]_{q^-1}^n q^((h-1)x) zeta^x by expanding (1 - t)^n in moments.
CycloRF integral_reflected_power(std::size_t n, const EulerParams& params, EulerCache& cache);
/// The same integral as q^(h+1) zeta E^(h)_{n,q^-1,zeta^-1} + [2]_q; requires n >= 1.
CycloRF integral_reflected_power_closed(std::size_t n, const EulerParams& params, EulerCache& cache);

}  // namespace qeuler

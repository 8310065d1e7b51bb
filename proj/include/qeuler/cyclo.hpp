#pragma once

// The quotient ring Q(q)[zeta] / Phi_{p^m}(zeta) in which every twisted Euler
// number lives. m = 0 encodes the untwisted case zeta = 1.

#include "qeuler/ratfunc.hpp"
#include "qeuler/zpoly.hpp"

#include <cstdint>
#include <vector>

namespace qeuler {

bool is_odd_prime(std::uint64_t p);

/// (p, m): zeta is a primitive p^m-th root of unity.
struct CycloRing {
    std::uint32_t p = 3;
    std::uint32_t m = 0;

    /// p^m
    std::size_t order() const;
    /// phi(p^m), the number of stored coefficients.
    std::size_t phi() const;
    /// Throws ParameterError unless p is an odd prime and p^m is of sane size.
    void validate() const;

    friend bool operator==(const CycloRing&, const CycloRing&) = default;
};

/// Phi_{p^m}(X) = sum_{j<p} X^(j p^(m-1)); m >= 1.
QPoly phi_cyclotomic(std::uint32_t p, std::uint32_t m);

class CycloRF {
public:
    /// Zero of the ring.
    explicit CycloRF(CycloRing ring);

    static CycloRF constant(CycloRing ring, const RatFunc& c);
    static CycloRF one(CycloRing ring) { return constant(ring, RatFunc(1)); }
    /// zeta^e for any integer e.
    static CycloRF zeta(CycloRing ring, long e = 1);
    /// sum_j coeffs[j] zeta^j; any length (reduced modulo Phi).
    static CycloRF from_coeffs(CycloRing ring, const std::vector<RatFunc>& coeffs);

    const CycloRing& ring() const noexcept { return ring_; }
    /// Integer form: element = (sum_j nums()[j] zeta^j) / den().
    const std::vector<ZPoly>& nums() const noexcept { return nums_; }
    const ZPoly& den() const noexcept { return den_; }

    RatFunc coeff(std::size_t j) const;
    std::vector<RatFunc> coeffs() const;

    bool is_zero() const noexcept;
    bool is_one() const;

    CycloRF operator-() const;
    CycloRF& operator+=(const CycloRF& o);
    CycloRF& operator-=(const CycloRF& o);
    CycloRF& operator*=(const CycloRF& o);
    CycloRF& operator*=(const RatFunc& r);
    CycloRF& operator*=(const Int& c);

    /// Multiply by q^k, k any integer.
    CycloRF& mul_q_power(long k);
    /// Multiply by zeta^e, e any integer.
    CycloRF& mul_zeta_power(long e);

    /// Multiplicative inverse by the extended Euclidean algorithm against
    /// Phi_{p^m} over Q(q). Throws DivisionByZero for zero.
    CycloRF inverse() const;
    /// The automorphism zeta -> zeta^-1.
    CycloRF zeta_conj() const;
    /// The automorphism q -> 1/q.
    CycloRF subst_q_inverse() const;
    /// Every coefficient evaluated at q = x. Throws PoleError naming the
    /// first coefficient whose denominator vanishes at x.
    CycloRF eval_at_q(const Rat& x) const;

    friend bool operator==(const CycloRF& a, const CycloRF& b) {
        return a.ring_ == b.ring_ && a.den_ == b.den_ && a.nums_ == b.nums_;
    }
    friend CycloRF operator+(CycloRF a, const CycloRF& b) { return a += b; }
    friend CycloRF operator-(CycloRF a, const CycloRF& b) { return a -= b; }
    friend CycloRF operator*(CycloRF a, const CycloRF& b) { return a *= b; }
    friend CycloRF operator*(CycloRF a, const RatFunc& b) { return a *= b; }
    friend CycloRF operator*(const RatFunc& b, CycloRF a) { return a *= b; }
    friend CycloRF operator*(CycloRF a, const Int& c) { return a *= c; }

private:
    void require_same_ring(const CycloRF& o) const;

    CycloRing ring_;
    std::vector<ZPoly> nums_;
    ZPoly den_;
};

// Free-function spellings of the ring operations.
inline CycloRF cyclo_inv(const CycloRF& a) { return a.inverse(); }
inline CycloRF zeta_conj(const CycloRF& a) { return a.zeta_conj(); }
inline CycloRF eval_at_q_rational(const CycloRF& a, const Rat& q0) { return a.eval_at_q(q0); }
inline RatFunc rf_subst_q_inverse(const RatFunc& a) { return a.subst_q_inverse(); }

}  // namespace qeuler

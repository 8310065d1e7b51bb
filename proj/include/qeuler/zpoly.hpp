#pragma once

// Dense univariate polynomials in q over the integers and the rationals.
//
// ZPoly is the workhorse of the exact engine: every rational function and
// every cyclotomic element is stored as integer polynomials over a common
// integer polynomial denominator. QPoly exists for the public canonical
// form (monic denominators with rational coefficients) and for printing.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qeuler {

using Int = mpz_class;
using Rat = mpq_class;

class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs);
    ZPoly(std::initializer_list<long> coeffs);

    static ZPoly constant(const Int& c);
    /// c * q^deg
    static ZPoly monomial(const Int& c, std::size_t deg);

    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const;

    const Int& lc() const { return c_.back(); }
    const Int& operator[](std::size_t i) const { return c_[i]; }
    /// Coefficient of q^i, zero beyond the degree.
    Int coeff(std::size_t i) const;
    std::span<const Int> coeffs() const noexcept { return c_; }

    /// Largest k with q^k dividing this polynomial (0 for the zero polynomial).
    std::size_t q_valuation() const;
    /// Multiply by q^k.
    ZPoly shifted_up(std::size_t k) const;
    /// Divide by q^k; requires k <= q_valuation().
    ZPoly shifted_down(std::size_t k) const;
    /// q^len-1 * p(1/q) where len-1 >= degree.
    ZPoly reversed(std::size_t len) const;

    /// gcd of the coefficients, non-negative.
    Int content() const;
    ZPoly& divexact(const Int& c);
    ZPoly& operator*=(const Int& c);
    ZPoly operator-() const;

    ZPoly& operator+=(const ZPoly& o);
    ZPoly& operator-=(const ZPoly& o);
    /// this += c * o * q^shift
    void add_scaled(const ZPoly& o, const Int& c, std::size_t shift = 0);

    Rat eval(const Rat& x) const;
    /// Value at x modulo `modulus`, result in [0, modulus).
    std::uint64_t eval_mod(std::uint64_t x, std::uint64_t modulus) const;

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Int> c_;
};

ZPoly operator+(ZPoly a, const ZPoly& b);
ZPoly operator-(ZPoly a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(ZPoly a, const Int& c);

/// Greatest common divisor of the primitive parts of a and b, normalised to
/// positive leading coefficient. Integer contents are ignored: the result is
/// primitive, and 1 when either argument is a nonzero constant.
/// gcd(a, 0) is the primitive part of a; gcd(0, 0) is 0.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// a / b when b divides a in Z[q], nullopt otherwise. b must be nonzero.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
/// a / b; throws std::logic_error when the division is not exact.
ZPoly divexact(const ZPoly& a, const ZPoly& b);

/// Polynomial with rational coefficients, lowest degree first, trimmed.
struct QPoly {
    std::vector<Rat> coeffs;

    bool is_zero() const noexcept { return coeffs.empty(); }
    long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs == b.coeffs; }
};

/// Scale an integer polynomial by 1/d.
QPoly to_qpoly(const ZPoly& p, const Int& d = 1);
/// Clear denominators: returns (z, d) with p = z / d, d > 0 minimal.
std::pair<ZPoly, Int> clear_denominators(const QPoly& p);

}  // namespace qeuler

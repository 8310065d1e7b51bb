#pragma once

#include "qeuler/zpoly.hpp"

namespace qeuler {

/// An element of Q(q), the field of rational functions in q.
///
/// Stored as integer polynomials num/den with gcd(num, den) = 1, the joint
/// integer content of (num, den) equal to 1 and lc(den) > 0. This form is
/// unique, so equality is field-wise. numerator()/denominator() give the
/// equivalent form with a monic denominator over Q.
class RatFunc {
public:
    /// The zero function.
    RatFunc() : den_{1} {}
    RatFunc(long c) : RatFunc(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Int& c) : RatFunc(Rat(c)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const Rat& c);  // NOLINT(google-explicit-constructor)
    explicit RatFunc(ZPoly p);
    /// Reduces num/den; throws DivisionByZero when den is zero.
    RatFunc(ZPoly num, ZPoly den);

    /// q^k for any integer k.
    static RatFunc q_power(long k);

    const ZPoly& num() const noexcept { return num_; }
    const ZPoly& den() const noexcept { return den_; }
    QPoly numerator() const;
    QPoly denominator() const;

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    RatFunc inverse() const;
    RatFunc pow(long e) const;

    /// a(1/q).
    RatFunc subst_q_inverse() const;

    /// Value at q = x; throws PoleError when the denominator vanishes there.
    Rat eval(const Rat& x) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

private:
    struct Canonical {};
    RatFunc(Canonical, ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    ZPoly num_;
    ZPoly den_;
};

}  // namespace qeuler

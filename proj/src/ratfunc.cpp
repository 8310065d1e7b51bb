#include "qeuler/ratfunc.hpp"

#include "fraction.hpp"
#include "qeuler/errors.hpp"

#include <span>

namespace qeuler {

RatFunc::RatFunc(const Rat& c) : num_(ZPoly::constant(c.get_num())), den_(ZPoly::constant(c.get_den())) {}

RatFunc::RatFunc(ZPoly p) : num_(std::move(p)), den_{1} {}

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    detail::canonicalize(std::span<ZPoly>(&num_, 1), den_);
}

RatFunc RatFunc::q_power(long k) {
    if (k >= 0) return RatFunc(Canonical{}, ZPoly::monomial(1, static_cast<std::size_t>(k)), ZPoly{1});
    return RatFunc(Canonical{}, ZPoly{1}, ZPoly::monomial(1, static_cast<std::size_t>(-k)));
}

QPoly RatFunc::numerator() const { return to_qpoly(num_, den_.lc()); }
QPoly RatFunc::denominator() const { return to_qpoly(den_, den_.lc()); }

RatFunc RatFunc::operator-() const { return RatFunc(Canonical{}, -num_, den_); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        detail::canonicalize(std::span<ZPoly>(&num_, 1), den_);
        return *this;
    }
    // Henrici: only the gcd of the two denominators can cancel.
    const ZPoly g = gcd(den_, o.den_);
    const ZPoly da = divexact(den_, g);
    const ZPoly db = divexact(o.den_, g);
    num_ = num_ * db + o.num_ * da;
    den_ = den_ * db;
    detail::canonicalize(std::span<ZPoly>(&num_, 1), den_, &g);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    if (is_zero() || o.is_zero()) return *this = RatFunc();
    const ZPoly g1 = gcd(num_, o.den_);
    const ZPoly g2 = gcd(o.num_, den_);
    ZPoly n1 = g1.is_one() ? num_ : divexact(num_, g1);
    ZPoly d2 = g1.is_one() ? o.den_ : divexact(o.den_, g1);
    ZPoly n2 = g2.is_one() ? o.num_ : divexact(o.num_, g2);
    ZPoly d1 = g2.is_one() ? den_ : divexact(den_, g2);
    num_ = n1 * n2;
    den_ = d1 * d2;
    detail::normalize_content(std::span<ZPoly>(&num_, 1), den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    ZPoly n = den_;
    ZPoly d = num_;
    if (sgn(d.lc()) < 0) {
        n = -n;
        d = -d;
    }
    return RatFunc(Canonical{}, std::move(n), std::move(d));
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1);
    RatFunc b = *this;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

RatFunc RatFunc::subst_q_inverse() const {
    RatFunc r = *this;
    detail::substitute_q_inverse(std::span<ZPoly>(&r.num_, 1), r.den_);
    return r;
}

Rat RatFunc::eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (sgn(d) == 0) throw PoleError("rational function has a pole at q = " + x.get_str());
    return num_.eval(x) / d;
}

}  // namespace qeuler

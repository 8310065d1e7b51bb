#include "qeuler/padic.hpp"

#include "qeuler/errors.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

namespace qeuler {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxModulus = u64{1} << 62;
constexpr u64 kMaxTerms = u64{1} << 26;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 addmod(u64 a, u64 b, u64 m) { return (a + b) % m; }
u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

/// Inverse of a scalar modulo m, or nullopt.
std::optional<u64> invmod(u64 a, u64 m) {
    Int r;
    const Int za(static_cast<unsigned long>(a));
    const Int zm(static_cast<unsigned long>(m));
    if (mpz_invert(r.get_mpz_t(), za.get_mpz_t(), zm.get_mpz_t()) == 0) return std::nullopt;
    return r.get_ui();
}

void reduce_cyclic(const CycloRing& ring, std::vector<u64>& t, u64 mod) {
    const std::size_t phi = ring.phi();
    if (ring.m == 0) {
        u64 s = 0;
        for (u64 c : t) s = addmod(s, c, mod);
        t.assign(1, s);
        return;
    }
    const std::size_t s = ring.order() / ring.p;
    for (std::size_t i = t.size(); i-- > phi;) {
        const u64 c = t[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j + 1 < ring.p; ++j) t[i - phi + j * s] = submod(t[i - phi + j * s], c, mod);
    }
    t.resize(phi);
}

std::uint32_t valuation_of(u64 c, std::uint32_t p, std::uint32_t K) {
    if (c == 0) return K;
    std::uint32_t v = 0;
    while (c % p == 0 && v < K) {
        c /= p;
        ++v;
    }
    return v;
}

}  // namespace

PadicConfig PadicConfig::with_default_q(std::uint32_t p, std::uint32_t K, std::uint32_t m) {
    return PadicConfig{p, K, m, u64{1} + p};
}

u64 PadicConfig::modulus() const {
    u64 r = 1;
    for (std::uint32_t i = 0; i < K; ++i) r *= p;
    return r;
}

void PadicConfig::validate() const {
    ring().validate();
    if (K < 1) throw ParameterError("precision K must be >= 1");
    u64 r = 1;
    for (std::uint32_t i = 0; i < K; ++i) {
        if (r > kMaxModulus / p) throw ParameterError("p^K must stay below 2^62");
        r *= p;
    }
    if (q0 % p != 1) {
        throw ParameterError("q0 = " + std::to_string(q0) + " is not congruent to 1 mod " + std::to_string(p) +
                             " (need |q0 - 1|_p < 1)");
    }
}

// ---------------------------------------------------------------------------

PadicExt::PadicExt(const PadicConfig& cfg) : cfg_(cfg), c_(cfg.ring().phi(), 0) {}

PadicExt::PadicExt(const PadicConfig& cfg, std::vector<u64> coeffs) : cfg_(cfg), c_(std::move(coeffs)) {
    const u64 mod = cfg_.modulus();
    for (auto& c : c_) c %= mod;
    if (c_.size() != cfg_.ring().phi()) {
        // Treat as exponents of zeta and reduce.
        std::vector<u64> t(std::max(c_.size(), cfg_.ring().order()), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const std::size_t e = i % cfg_.ring().order();
            t[e] = addmod(t[e], c_[i], mod);
        }
        t.resize(cfg_.ring().order());
        reduce_cyclic(cfg_.ring(), t, mod);
        c_ = std::move(t);
    }
}

PadicExt PadicExt::constant(const PadicConfig& cfg, u64 c) {
    PadicExt r(cfg);
    r.c_[0] = c % cfg.modulus();
    return r;
}

PadicExt PadicExt::zeta(const PadicConfig& cfg, long e) {
    const auto order = static_cast<long>(cfg.ring().order());
    std::vector<u64> t(static_cast<std::size_t>(order), 0);
    t[static_cast<std::size_t>(((e % order) + order) % order)] = 1;
    reduce_cyclic(cfg.ring(), t, cfg.modulus());
    return PadicExt(cfg, std::move(t));
}

bool PadicExt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 c) { return c == 0; });
}

bool PadicExt::is_unit() const {
    // The residue ring modulo (p, zeta - 1) is F_p; evaluate at zeta = 1.
    u64 s = 0;
    for (u64 c : c_) s = (s + c % cfg_.p) % cfg_.p;
    return s != 0;
}

std::uint32_t PadicExt::valuation() const {
    std::uint32_t v = cfg_.K;
    for (u64 c : c_) v = std::min(v, valuation_of(c, cfg_.p, cfg_.K));
    return v;
}

void PadicExt::require_same(const PadicExt& o) const {
    if (!(cfg_ == o.cfg_)) throw ParameterError("p-adic configuration mismatch");
}

PadicExt PadicExt::operator-() const {
    PadicExt r(cfg_);
    const u64 mod = cfg_.modulus();
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = submod(0, c_[i], mod);
    return r;
}

PadicExt& PadicExt::operator+=(const PadicExt& o) {
    require_same(o);
    const u64 mod = cfg_.modulus();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = addmod(c_[i], o.c_[i], mod);
    return *this;
}

PadicExt& PadicExt::operator-=(const PadicExt& o) {
    require_same(o);
    const u64 mod = cfg_.modulus();
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = submod(c_[i], o.c_[i], mod);
    return *this;
}

PadicExt& PadicExt::operator*=(u64 c) {
    const u64 mod = cfg_.modulus();
    c %= mod;
    for (auto& x : c_) x = mulmod(x, c, mod);
    return *this;
}

PadicExt& PadicExt::operator*=(const PadicExt& o) {
    require_same(o);
    const u64 mod = cfg_.modulus();
    const std::size_t order = cfg_.ring().order();
    std::vector<u64> t(order, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            const std::size_t e = (i + j) % order;
            t[e] = addmod(t[e], mulmod(c_[i], o.c_[j], mod), mod);
        }
    }
    reduce_cyclic(cfg_.ring(), t, mod);
    c_ = std::move(t);
    return *this;
}

PadicExt PadicExt::inverse() const {
    if (!is_unit()) throw NonUnitError("p-adic element is not a unit (vanishes modulo (p, zeta - 1))");
    u64 s = 0;
    for (u64 c : c_) s = (s + c % cfg_.p) % cfg_.p;
    const u64 start = powmod(s, cfg_.p - 2, cfg_.p);

    // x <- x (2 - a x); the error 1 - a x squares each step in the maximal
    // ideal (p, zeta - 1), whose phi(p^m)-th power lies in (p).
    PadicExt x = constant(cfg_, start);
    const PadicExt one = constant(cfg_, 1);
    const PadicExt two = constant(cfg_, 2);
    const std::size_t limit = 2 * static_cast<std::size_t>(std::bit_width(cfg_.ring().phi() * cfg_.K)) + 8;
    for (std::size_t i = 0; i < limit; ++i) {
        const PadicExt ax = *this * x;
        if (ax == one) return x;
        x *= two - ax;
    }
    throw std::logic_error("pad_inv: Newton iteration did not converge");
}

// ---------------------------------------------------------------------------

PadicExt fermionic_integral_truncated(std::size_t n, const EulerParams& params, const PadicConfig& cfg,
                                      std::uint32_t N) {
    cfg.validate();
    if (params.p != cfg.p || params.m != cfg.m) throw ParameterError("EulerParams and PadicConfig disagree on (p, m)");
    if (N < cfg.m) {
        throw ParameterError("truncation level N = " + std::to_string(N) + " must be >= m = " + std::to_string(cfg.m));
    }
    u64 terms = 1;
    for (std::uint32_t i = 0; i < N; ++i) {
        terms *= cfg.p;
        if (terms > kMaxTerms) throw ParameterError("p^N exceeds the truncation term limit 2^26");
    }
    const u64 mod = cfg.modulus();
    const u64 q0 = cfg.q0 % mod;
    const u64 q_inv = *invmod(q0, mod);

    // (-q0)^x q0^((h-1)x) = (-q0^h)^x
    const u64 qh = params.h >= 0 ? powmod(q0, static_cast<u64>(params.h), mod)
                                 : powmod(q_inv, static_cast<u64>(-params.h), mod);
    const u64 w = submod(0, qh, mod);

    const std::size_t order = cfg.ring().order();
    std::vector<u64> sums(order, 0);
    u64 qnum = 0;   // [x]_{q0}
    u64 qpow = 1;   // q0^x
    u64 wpow = 1;   // w^x
    for (u64 x = 0; x < terms; ++x) {
        const u64 term = mulmod(powmod(qnum, n, mod), wpow, mod);
        const std::size_t r = static_cast<std::size_t>(x % order);
        sums[r] = addmod(sums[r], term, mod);
        qnum = addmod(qnum, qpow, mod);
        qpow = mulmod(qpow, q0, mod);
        wpow = mulmod(wpow, w, mod);
    }
    reduce_cyclic(cfg.ring(), sums, mod);
    PadicExt r(cfg, std::move(sums));

    // 1 + q0^(p^N) = 2 mod p, a unit for odd p.
    const u64 divisor = addmod(1, powmod(q0, terms, mod), mod);
    r *= mulmod(addmod(1, q0, mod), *invmod(divisor, mod), mod);
    return r;
}

PadicExt specialize(const CycloRF& a, const PadicConfig& cfg) {
    cfg.validate();
    if (!(a.ring() == cfg.ring())) throw ParameterError("specialize: cyclotomic ring does not match the config");
    const u64 mod = cfg.modulus();
    const u64 q0 = cfg.q0 % mod;
    auto eval = [&](const ZPoly& z) { return z.eval_mod(q0, mod); };

    std::vector<u64> out(a.nums().size(), 0);
    if (auto dinv = invmod(eval(a.den()), mod)) {
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = mulmod(eval(a.nums()[j]), *dinv, mod);
        return PadicExt(cfg, std::move(out));
    }
    for (std::size_t j = 0; j < out.size(); ++j) {
        const RatFunc c = a.coeff(j);
        if (c.is_zero()) continue;
        const auto cinv = invmod(eval(c.den()), mod);
        if (!cinv) {
            throw NonUnitError("specialize: denominator of the zeta^" + std::to_string(j) +
                               " coefficient is not a unit at q0 = " + std::to_string(cfg.q0));
        }
        out[j] = mulmod(eval(c.num()), *cinv, mod);
    }
    return PadicExt(cfg, std::move(out));
}

ConvergenceProbe convergence_probe(std::size_t n, const EulerParams& params, const PadicConfig& cfg,
                                   const std::vector<std::uint32_t>& levels) {
    if (!std::is_sorted(levels.begin(), levels.end()) ||
        std::adjacent_find(levels.begin(), levels.end()) != levels.end()) {
        throw ParameterError("convergence_probe: levels must be strictly increasing");
    }
    ConvergenceProbe probe;
    probe.levels = levels;
    for (std::uint32_t N : levels) probe.values.push_back(fermionic_integral_truncated(n, params, cfg, N));
    for (std::size_t i = 1; i < probe.values.size(); ++i) {
        probe.diff_valuations.push_back((probe.values[i] - probe.values[i - 1]).valuation());
    }
    return probe;
}

}  // namespace qeuler

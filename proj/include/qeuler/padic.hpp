#pragma once

// Numeric arithmetic in (Z/p^K)[zeta]/Phi_{p^m}(zeta) and the fermionic
// p-adic q-integral evaluated by its truncated defining sum.

#include "qeuler/cyclo.hpp"
#include "qeuler/qspecial.hpp"

#include <cstdint>
#include <vector>

namespace qeuler {

struct PadicConfig {
    std::uint32_t p = 3;
    std::uint32_t K = 12;
    std::uint32_t m = 1;
    /// Residue of q modulo p^K; must be 1 modulo p.
    std::uint64_t q0 = 4;

    /// Default q0 = 1 + p.
    static PadicConfig with_default_q(std::uint32_t p, std::uint32_t K, std::uint32_t m);

    std::uint64_t modulus() const;
    CycloRing ring() const { return {p, m}; }
    /// Throws ParameterError: p odd prime, K >= 1, p^K < 2^62, q0 = 1 mod p.
    void validate() const;

    friend bool operator==(const PadicConfig&, const PadicConfig&) = default;
};

class PadicExt {
public:
    /// Zero.
    explicit PadicExt(const PadicConfig& cfg);
    /// coeffs[j] is the coefficient of zeta^j; lengths other than phi(p^m) are
    /// reduced modulo Phi_{p^m}.
    PadicExt(const PadicConfig& cfg, std::vector<std::uint64_t> coeffs);

    static PadicExt constant(const PadicConfig& cfg, std::uint64_t c);
    static PadicExt zeta(const PadicConfig& cfg, long e = 1);

    const PadicConfig& config() const noexcept { return cfg_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

    bool is_zero() const;
    bool is_unit() const;
    /// min over coefficients of their p-adic valuation; K for zero.
    std::uint32_t valuation() const;

    PadicExt operator-() const;
    PadicExt& operator+=(const PadicExt& o);
    PadicExt& operator-=(const PadicExt& o);
    PadicExt& operator*=(const PadicExt& o);
    PadicExt& operator*=(std::uint64_t c);

    /// Inverse by Newton iteration from a residue-field inverse; throws NonUnitError.
    PadicExt inverse() const;

    friend bool operator==(const PadicExt& a, const PadicExt& b) {
        return a.cfg_ == b.cfg_ && a.c_ == b.c_;
    }
    friend PadicExt operator+(PadicExt a, const PadicExt& b) { return a += b; }
    friend PadicExt operator-(PadicExt a, const PadicExt& b) { return a -= b; }
    friend PadicExt operator*(PadicExt a, const PadicExt& b) { return a *= b; }

private:
    void require_same(const PadicExt& o) const;

    PadicConfig cfg_;
    std::vector<std::uint64_t> c_;
};

inline PadicExt pad_inv(const PadicExt& a) { return a.inverse(); }

/// (1+q0)/(1+q0^(p^N)) sum_{x < p^N} [x]_{q0}^n zeta^x q0^((h-1)x) (-q0)^x.
/// Requires N >= m and params matching cfg in (p, m).
PadicExt fermionic_integral_truncated(std::size_t n, const EulerParams& params, const PadicConfig& cfg,
                                      std::uint32_t N);

/// Image of an exact element at q = q0. Throws NonUnitError naming the
/// coefficient whose denominator is not a unit.
PadicExt specialize(const CycloRF& a, const PadicConfig& cfg);

struct ConvergenceProbe {
    std::vector<std::uint32_t> levels;
    std::vector<PadicExt> values;
    /// valuation(values[i+1] - values[i])
    std::vector<std::uint32_t> diff_valuations;
};

ConvergenceProbe convergence_probe(std::size_t n, const EulerParams& params, const PadicConfig& cfg,
                                   const std::vector<std::uint32_t>& levels);

}  // namespace qeuler

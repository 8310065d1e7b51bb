#pragma once

// Catalog of exact identities for the twisted (h, q)-Euler family, checked
// as canonical-form equalities in CycloRF, plus the exact-vs-p-adic
// numeric cross-check.

#include "qeuler/padic.hpp"
#include "qeuler/qspecial.hpp"

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qeuler {

enum class TheoremId {
    T1_CLOSED_EQ_EXPANSION,
    T2_REFLECTION,
    T3_RECURRENCE,
    T4_SHIFT2,
    T5_REFLECT_INTEGRAL,
    C6_INTEGRAL,
    EQ12_SYMMETRY,
    T7_BERNSTEIN_INTEGRAL,
    T8_PRODUCT2,
    C9_MOMENT_FORM,
    T10_PRODUCT_S,
    C11_MOMENT_FORM_S,
    LEMMA_COMPLEMENT,
};

inline constexpr std::array<TheoremId, 13> kAllTheorems = {
    TheoremId::T1_CLOSED_EQ_EXPANSION, TheoremId::T2_REFLECTION,       TheoremId::T3_RECURRENCE,
    TheoremId::T4_SHIFT2,              TheoremId::T5_REFLECT_INTEGRAL, TheoremId::C6_INTEGRAL,
    TheoremId::EQ12_SYMMETRY,          TheoremId::T7_BERNSTEIN_INTEGRAL, TheoremId::T8_PRODUCT2,
    TheoremId::C9_MOMENT_FORM,         TheoremId::T10_PRODUCT_S,       TheoremId::C11_MOMENT_FORM_S,
    TheoremId::LEMMA_COMPLEMENT,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
/// True for identities that do not depend on (p, m, h).
bool parameter_free(TheoremId id);

/// One parameter point. Each theorem reads only the fields it needs:
/// n, x for polynomial identities; (n, k) for single Bernstein integrals;
/// (ns, k) for products, whose arity is ns.size().
struct Point {
    std::uint32_t p = 3;
    std::uint32_t m = 1;
    long h = 1;
    std::size_t n = 0;
    std::size_t k = 0;
    long x = 0;
    std::vector<std::size_t> ns;

    EulerParams params() const { return {p, m, h}; }
    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Verdict { Pass, Fail, Rejected };
std::string_view verdict_name(Verdict v);

struct IdentityReport {
    TheoremId theorem{};
    Point point;
    Verdict verdict = Verdict::Pass;
    /// Why a point was rejected.
    std::string reason;
    /// Canonical forms of both sides, filled on failure only.
    std::string lhs;
    std::string rhs;
    /// Reading notes attached to a checker.
    std::string note;
    double elapsed_ms = 0.0;

    bool passed() const { return verdict == Verdict::Pass; }
};

/// Deliberately wrong right-hand-side builders, used to show that the
/// checkers can fail.
enum class Mutant {
    None,
    C6_Q_EXPONENT,     // q^(h+1) -> q^h
    T2_SIGN,           // (-1)^n -> (-1)^(n+1)
    T4_ZETA_EXPONENT,  // q^(2h) zeta^2 -> q^(2h) zeta in the inhomogeneous term
    T7_SIGN,           // (-1)^(k+l) -> (-1)^l
    T8_Q_EXPONENT,     // q^(h+1) -> q^(h+2)
};

inline constexpr std::array<Mutant, 5> kAllMutants = {
    Mutant::C6_Q_EXPONENT, Mutant::T2_SIGN, Mutant::T4_ZETA_EXPONENT, Mutant::T7_SIGN, Mutant::T8_Q_EXPONENT,
};

std::string_view mutant_name(Mutant m);
std::optional<Mutant> parse_mutant(std::string_view name);

/// Runs checkers, sharing one EulerCache per parameter triple. Safe to call
/// from several threads.
class Verifier {
public:
    explicit Verifier(Mutant mutant = Mutant::None) : mutant_(mutant) {}

    IdentityReport verify(TheoremId id, const Point& pt);
    EulerCache& cache(const EulerParams& params);

private:
    Mutant mutant_;
    std::mutex mu_;
    std::map<EulerParams, std::unique_ptr<EulerCache>> caches_;
};

struct GridSpec {
    std::vector<std::uint32_t> primes{3, 5};
    std::vector<std::uint32_t> levels{0, 1};
    long h_min = -2;
    long h_max = 3;
    std::size_t n_max = 8;
    long x_min = -3;
    long x_max = 4;
    std::size_t s_min = 2;
    std::size_t s_max = 3;
    /// Bound on each n_i in product identities.
    std::size_t ni_max = 4;
    /// Empty means every theorem.
    std::vector<TheoremId> theorems;
};

using Job = std::pair<TheoremId, Point>;

/// Every (theorem, point) pair of the grid satisfying the side conditions,
/// in sorted order. Products use nondecreasing tuples n_1 <= ... <= n_s and
/// 0 <= k <= n_1. Parameter-free identities are listed once, and only when
/// the grid has at least one (p, m, h).
std::vector<Job> enumerate_grid(const GridSpec& grid);

struct RunOptions {
    unsigned threads = 1;
    Mutant mutant = Mutant::None;
};

struct TheoremCounts {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t rejected = 0;
};

struct GridResult {
    std::vector<IdentityReport> reports;
    TheoremCounts total;
    std::map<TheoremId, TheoremCounts> by_theorem;
    double elapsed_ms = 0.0;
};

/// Reports come back sorted by (theorem, point) whatever the thread count.
GridResult run_jobs(const std::vector<Job>& jobs, const RunOptions& opts = {});
GridResult run_grid(const GridSpec& grid, const RunOptions& opts = {});

struct CrosscheckRow {
    std::size_t n = 0;
    std::uint32_t N = 0;
    std::uint32_t valuation = 0;
};

struct CrosscheckReport {
    EulerParams params;
    PadicConfig cfg;
    std::vector<CrosscheckRow> rows;
    /// Degrees whose valuations decrease somewhere along the levels.
    std::vector<std::size_t> non_monotone;

    bool monotone() const { return non_monotone.empty(); }
};

/// valuation(specialize(E_n) - truncated integral at level N) for n <= n_max
/// and each N in levels (strictly increasing, each >= m).
CrosscheckReport numeric_crosscheck(std::size_t n_max, const EulerParams& params, const PadicConfig& cfg,
                                    const std::vector<std::uint32_t>& levels);

}  // namespace qeuler

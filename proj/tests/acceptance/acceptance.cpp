// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "qeuler/identity.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qspecial.hpp"
#include "qeuler/text_format.hpp"

#include "../support/generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace qeuler;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<EulerParams> grid_triples(const GridSpec& g) {
    std::vector<EulerParams> out;
    for (auto p : g.primes)
        for (auto m : g.levels)
            for (long h = g.h_min; h <= g.h_max; ++h) out.push_back({p, m, h});
    return out;
}

Outcome criterion1() {
    const auto t0 = Clock::now();
    const GridResult res = run_grid(GridSpec{});
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << res.reports.size() << " reports, " << res.total.failed << " failed, " << res.total.rejected
       << " rejected, " << res.by_theorem.size() << "/13 theorems, " << secs << " s";
    bool every_theorem = true;
    for (TheoremId id : kAllTheorems) {
        auto it = res.by_theorem.find(id);
        if (it == res.by_theorem.end() || it->second.passed == 0) every_theorem = false;
    }
    return {res.total.failed == 0 && res.total.rejected == 0 && every_theorem && secs < 300, os.str()};
}

Outcome criterion2() {
    const GridSpec g;
    std::size_t numbers = 0, polys = 0, mismatches = 0;
    for (const auto& ep : grid_triples(g)) {
        EulerCache cache(ep);
        for (std::size_t n = 0; n <= g.n_max; ++n) {
            ++numbers;
            if (!(euler_number(n, ep, cache) == euler_number_closed(n, ep))) ++mismatches;
            for (long x = g.x_min; x <= g.x_max; ++x) {
                ++polys;
                if (!(euler_poly(n, x, ep, cache) == euler_poly_closed(n, x, ep))) ++mismatches;
            }
        }
    }
    std::ostringstream os;
    os << numbers << " numbers and " << polys << " polynomial values compared, " << mismatches << " mismatches";
    return {mismatches == 0, os.str()};
}

// (E + 1)^n + E_n = 0 with E_0 = 1, i.e. E_n = -1/2 sum_{l<n} C(n,l) E_l.
std::vector<Rat> classical_euler(unsigned n_max) {
    std::vector<std::vector<Int>> pascal{{1}};
    for (unsigned n = 1; n <= n_max; ++n) {
        std::vector<Int> row(n + 1, 1);
        for (unsigned k = 1; k < n; ++k) row[k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
        pascal.push_back(row);
    }
    std::vector<Rat> e{1};
    for (unsigned n = 1; n <= n_max; ++n) {
        Rat s = 0;
        for (unsigned l = 0; l < n; ++l) s += Rat(pascal[n][l]) * e[l];
        e.push_back(-s / 2);
    }
    return e;
}

Outcome criterion3() {
    const auto expected = classical_euler(8);
    const EulerParams ep{3, 0, 1};
    EulerCache cache(ep);
    std::ostringstream os;
    bool ok = expected[1] == Rat(-1, 2) && expected[3] == Rat(1, 4);
    for (std::size_t n = 0; n <= 8; ++n) {
        const Rat got = eval_at_q_rational(cache.number(n), Rat(1)).coeff(0).eval(0);
        os << (n ? ", " : "") << got.get_str();
        if (got != expected[n]) ok = false;
    }
    return {ok, "E_0..E_8 at q = 1: " + os.str()};
}

Outcome criterion4() {
    const auto t0 = Clock::now();
    std::ostringstream os;
    bool ok = true;
    for (const EulerParams ep : {EulerParams{3, 1, 1}, EulerParams{3, 1, -1}, EulerParams{5, 1, 2}}) {
        const PadicConfig cfg = PadicConfig::with_default_q(ep.p, 12, ep.m);
        const auto rep = numeric_crosscheck(4, ep, cfg, {ep.m + 1, ep.m + 2, ep.m + 3});
        os << "(" << ep.p << "," << ep.m << "," << ep.h << "):";
        for (const auto& row : rep.rows) {
            if (row.N == ep.m + 1) {
                os << (row.n ? " | " : " ") << row.valuation;
                if (row.valuation < 1) ok = false;
            } else {
                os << "," << row.valuation;
            }
        }
        os << "; ";
        if (!rep.monotone()) ok = false;
    }
    for (std::uint32_t p : {3u, 5u}) {
        const PadicConfig cfg0 = PadicConfig::with_default_q(p, 12, 0);
        for (std::uint32_t N = 0; N <= 5; ++N) {
            if (!(fermionic_integral_truncated(0, {p, 0, 1}, cfg0, N) == PadicExt::constant(cfg0, 1))) ok = false;
        }
    }
    const double secs = seconds_since(t0);
    os << "n = 0, m = 0 integral exact at N = 0..5; " << secs << " s";
    return {ok && secs < 120, os.str()};
}

Outcome criterion5() {
    std::ostringstream os;
    bool ok = true;
    for (Mutant m : kAllMutants) {
        const GridResult res = run_grid(GridSpec{}, {1, m});
        os << mutant_name(m) << ": " << res.total.failed << " failures; ";
        if (res.total.failed == 0) ok = false;
    }
    return {ok, os.str()};
}

Outcome criterion6() {
    testing::Gen g(20260601);
    const std::vector<CycloRing> rings{{3, 0}, {3, 1}, {5, 1}, {3, 2}, {7, 1}};
    std::size_t good = 0;
    for (int i = 0; i < 200; ++i) {
        const CycloRing ring = rings[static_cast<std::size_t>(i) % rings.size()];
        const CycloRF a = g.cyclo(ring, 5, 60);
        if (parse_cyclo(to_string(a), ring) == a) ++good;
    }
    return {good == 200, std::to_string(good) + "/200 values round-tripped"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 exact identity suite on the default grid", criterion1},
        {"2 recurrence and closed form agree on the grid", criterion2},
        {"3 classical limit at q = 1 matches (E+1)^n + E_n = 0", criterion3},
        {"4 p-adic valuations non-decreasing in N", criterion4},
        {"5 every mutant fails on the default grid", criterion5},
        {"6 serialization round trip", criterion6},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %s: %s\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        if (!o.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}

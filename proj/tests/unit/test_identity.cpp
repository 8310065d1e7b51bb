#include "qeuler/identity.hpp"
#include "qeuler/report_io.hpp"

#include <doctest.h>

using namespace qeuler;

namespace {

Point pt(std::uint32_t p, std::uint32_t m, long h) {
    Point r;
    r.p = p;
    r.m = m;
    r.h = h;
    return r;
}

GridSpec small_grid() {
    GridSpec g;
    g.primes = {3};
    g.levels = {1};
    g.h_min = 1;
    g.h_max = 2;
    g.n_max = 4;
    g.x_min = -1;
    g.x_max = 2;
    g.ni_max = 3;
    return g;
}

nlohmann::json without_timing(nlohmann::json j) {
    for (auto& r : j) r.erase("elapsed_ms");
    return j;
}

}  // namespace

TEST_CASE("identity: names round trip") {
    for (TheoremId id : kAllTheorems) CHECK(parse_theorem(theorem_name(id)) == id);
    CHECK(parse_theorem("T2") == TheoremId::T2_REFLECTION);
    CHECK(parse_theorem("C11") == TheoremId::C11_MOMENT_FORM_S);
    CHECK(parse_theorem("T1") == TheoremId::T1_CLOSED_EQ_EXPANSION);
    CHECK_FALSE(parse_theorem("T99").has_value());
    for (Mutant m : kAllMutants) CHECK(parse_mutant(mutant_name(m)) == m);
}

TEST_CASE("identity: single points") {
    Verifier v;
    Point p = pt(3, 1, 1);
    p.n = 1;
    CHECK(v.verify(TheoremId::T4_SHIFT2, p).verdict == Verdict::Pass);

    p.n = 0;
    const auto c6 = v.verify(TheoremId::C6_INTEGRAL, p);
    CHECK(c6.verdict == Verdict::Rejected);
    CHECK(c6.reason.find("n >= 1") != std::string::npos);

    Point t7 = pt(3, 1, 1);
    t7.n = 2;
    t7.k = 2;
    CHECK(v.verify(TheoremId::T7_BERNSTEIN_INTEGRAL, t7).verdict == Verdict::Rejected);

    Point bad = pt(9, 1, 1);
    CHECK(v.verify(TheoremId::T3_RECURRENCE, bad).verdict == Verdict::Rejected);

    Point prod = pt(3, 1, 1);
    prod.ns = {2, 2};
    prod.k = 1;
    const auto t10 = v.verify(TheoremId::T10_PRODUCT_S, prod);
    const auto t8 = v.verify(TheoremId::T8_PRODUCT2, prod);
    CHECK(t10.verdict == Verdict::Pass);
    CHECK(t10.verdict == t8.verdict);

    prod.k = 2;  // 2 + 2 > 2*2 fails
    CHECK(v.verify(TheoremId::T8_PRODUCT2, prod).verdict == Verdict::Rejected);
    CHECK(v.verify(TheoremId::C9_MOMENT_FORM, prod).verdict == Verdict::Rejected);

    prod.ns = {1, 1, 1};
    prod.k = 0;
    CHECK(v.verify(TheoremId::T8_PRODUCT2, prod).verdict == Verdict::Rejected);
}

TEST_CASE("identity: one point per theorem gives 13 reports") {
    std::vector<Job> jobs;
    for (TheoremId id : kAllTheorems) {
        Point p = pt(5, 1, -1);
        p.n = 3;
        p.k = 1;
        p.x = 2;
        p.ns = {2, 3};
        jobs.emplace_back(id, p);
    }
    const GridResult res = run_jobs(jobs);
    CHECK(res.reports.size() == 13);
    CHECK(res.total.passed == 13);
    CHECK(res.by_theorem.size() == 13);
}

TEST_CASE("identity: grid enumeration") {
    GridSpec empty = small_grid();
    empty.h_min = 1;
    empty.h_max = 0;
    CHECK(enumerate_grid(empty).empty());
    CHECK(run_grid(empty).reports.empty());

    const auto jobs = enumerate_grid(small_grid());
    CHECK(std::is_sorted(jobs.begin(), jobs.end()));
    for (TheoremId id : kAllTheorems) {
        CHECK(std::any_of(jobs.begin(), jobs.end(), [&](const Job& j) { return j.first == id; }));
    }
    GridSpec only_t2 = small_grid();
    only_t2.theorems = {TheoremId::T2_REFLECTION};
    const auto t2 = enumerate_grid(only_t2);
    CHECK(t2.size() == 2 * 5 * 4);
    CHECK(std::all_of(t2.begin(), t2.end(), [](const Job& j) { return j.first == TheoremId::T2_REFLECTION; }));
}

TEST_CASE("identity: small grid passes; threads do not change the report") {
    const GridResult seq = run_grid(small_grid(), {1, Mutant::None});
    const GridResult par = run_grid(small_grid(), {4, Mutant::None});
    CHECK(seq.total.failed == 0);
    CHECK(seq.total.rejected == 0);
    CHECK(seq.total.passed > 100);
    CHECK(without_timing(reports_to_json(seq)) == without_timing(reports_to_json(par)));
}

TEST_CASE("identity: T10 and C11 at s = 2 agree with T8 and C9") {
    GridSpec g = small_grid();
    g.s_max = 2;
    const GridResult res = run_grid(g);
    std::map<std::pair<Point, bool>, Verdict> seen;
    for (const auto& r : res.reports) {
        const bool moment = r.theorem == TheoremId::C9_MOMENT_FORM || r.theorem == TheoremId::C11_MOMENT_FORM_S;
        auto [it, fresh] = seen.try_emplace({r.point, moment}, r.verdict);
        if (!fresh) CHECK(it->second == r.verdict);
    }
    CHECK(res.by_theorem.at(TheoremId::T10_PRODUCT_S).passed == res.by_theorem.at(TheoremId::T8_PRODUCT2).passed);
    CHECK(res.by_theorem.at(TheoremId::C11_MOMENT_FORM_S).passed ==
          res.by_theorem.at(TheoremId::C9_MOMENT_FORM).passed);
}

TEST_CASE("identity: every mutant is caught on a small grid") {
    for (Mutant m : kAllMutants) {
        const GridResult res = run_grid(small_grid(), {1, m});
        CAPTURE(mutant_name(m));
        CHECK(res.total.failed > 0);
        for (const auto& r : res.reports) {
            if (r.verdict == Verdict::Fail) {
                CHECK_FALSE(r.lhs.empty());
                CHECK(r.lhs != r.rhs);
            }
        }
    }
}

TEST_CASE("identity: report serialization") {
    Verifier v(Mutant::C6_Q_EXPONENT);
    Point p = pt(3, 1, 1);
    p.n = 2;
    const auto j = report_to_json(v.verify(TheoremId::C6_INTEGRAL, p));
    CHECK(j["passed"] == false);
    CHECK(j["verdict"] == "fail");
    CHECK(j.contains("lhs"));
    CHECK(j["point"] == nlohmann::json{{"p", 3}, {"m", 1}, {"h", 1}, {"n", 2}});

    Verifier ok;
    const auto c9 = report_to_json(ok.verify(TheoremId::C9_MOMENT_FORM, [] {
        Point q = pt(3, 0, 1);
        q.ns = {1, 2};
        return q;
    }()));
    CHECK(c9["passed"] == true);
    CHECK_FALSE(c9.contains("lhs"));
    CHECK(c9.contains("note"));
    CHECK(c9["point"]["s"] == 2);
}

TEST_CASE("identity: numeric cross-check") {
    const auto trivial = numeric_crosscheck(0, {3, 0, 1}, PadicConfig::with_default_q(3, 12, 0), {0, 1, 2, 3});
    for (const auto& row : trivial.rows) CHECK(row.valuation == 12);

    const auto a = numeric_crosscheck(4, {3, 1, 1}, PadicConfig::with_default_q(3, 12, 1), {3, 4, 5});
    CHECK(a.monotone());
    CHECK(a.rows.size() == 15);

    const auto b = numeric_crosscheck(3, {5, 1, -1}, PadicConfig::with_default_q(5, 12, 1), {2, 3, 4});
    CHECK(b.monotone());
    for (const auto& row : b.rows) CHECK(row.valuation >= 1);

    CHECK_THROWS(numeric_crosscheck(1, {3, 1, 1}, PadicConfig::with_default_q(3, 12, 1), {3, 2}));
}

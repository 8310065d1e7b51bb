#include "qeuler/identity.hpp"

#include "qeuler/errors.hpp"
#include "qeuler/text_format.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace qeuler {

namespace {

struct Name {
    TheoremId id;
    std::string_view text;
};

constexpr std::array<Name, 13> kNames = {{
    {TheoremId::T1_CLOSED_EQ_EXPANSION, "T1_CLOSED_EQ_EXPANSION"},
    {TheoremId::T2_REFLECTION, "T2_REFLECTION"},
    {TheoremId::T3_RECURRENCE, "T3_RECURRENCE"},
    {TheoremId::T4_SHIFT2, "T4_SHIFT2"},
    {TheoremId::T5_REFLECT_INTEGRAL, "T5_REFLECT_INTEGRAL"},
    {TheoremId::C6_INTEGRAL, "C6_INTEGRAL"},
    {TheoremId::EQ12_SYMMETRY, "EQ12_SYMMETRY"},
    {TheoremId::T7_BERNSTEIN_INTEGRAL, "T7_BERNSTEIN_INTEGRAL"},
    {TheoremId::T8_PRODUCT2, "T8_PRODUCT2"},
    {TheoremId::C9_MOMENT_FORM, "C9_MOMENT_FORM"},
    {TheoremId::T10_PRODUCT_S, "T10_PRODUCT_S"},
    {TheoremId::C11_MOMENT_FORM_S, "C11_MOMENT_FORM_S"},
    {TheoremId::LEMMA_COMPLEMENT, "LEMMA_COMPLEMENT"},
}};

constexpr std::string_view kC9Note =
    "left side read as E_{2k+l,q,zeta}; rows with m = 0 give the zeta = 1 reading";

// q^a zeta^e
CycloRF qz(CycloRing ring, long a, long e) {
    CycloRF r = CycloRF::zeta(ring, e);
    r.mul_q_power(a);
    return r;
}

RatFunc two_q() { return RatFunc(ZPoly{1, 1}); }

long sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

struct Outcome {
    bool equal = true;
    std::string lhs, rhs;
};

Outcome compare(const CycloRF& lhs, const CycloRF& rhs) {
    if (lhs == rhs) return {};
    return {false, to_string(lhs), to_string(rhs)};
}

Outcome compare(const RatFunc& lhs, const RatFunc& rhs) {
    if (lhs == rhs) return {};
    return {false, to_string(lhs), to_string(rhs)};
}

/// Thrown inside a checker to mark the point as outside the hypotheses.
struct Reject {
    std::string reason;
};

std::size_t total(const std::vector<std::size_t>& ns) { return std::accumulate(ns.begin(), ns.end(), std::size_t{0}); }

class Checker {
public:
    Checker(const Point& pt, Mutant mutant, EulerCache* cache)
        : pt_(pt), mutant_(mutant), cache_(cache), ring_(pt.params().ring()) {}

    Outcome run(TheoremId id) {
        switch (id) {
            case TheoremId::T1_CLOSED_EQ_EXPANSION: return t1();
            case TheoremId::T2_REFLECTION: return t2();
            case TheoremId::T3_RECURRENCE: return t3();
            case TheoremId::T4_SHIFT2: return t4();
            case TheoremId::T5_REFLECT_INTEGRAL: return t5();
            case TheoremId::C6_INTEGRAL: return c6();
            case TheoremId::EQ12_SYMMETRY: return eq12();
            case TheoremId::T7_BERNSTEIN_INTEGRAL: return t7();
            case TheoremId::T8_PRODUCT2: return product(2, true, mutant_ == Mutant::T8_Q_EXPONENT);
            case TheoremId::C9_MOMENT_FORM: return product(2, false, false);
            case TheoremId::T10_PRODUCT_S: return product(0, true, false);
            case TheoremId::C11_MOMENT_FORM_S: return product(0, false, false);
            case TheoremId::LEMMA_COMPLEMENT: return lemma();
        }
        throw std::logic_error("unknown theorem id");
    }

private:
    EulerParams params() const { return pt_.params(); }
    long h() const { return pt_.h; }
    const CycloRF& E(std::size_t n) { return cache_->number(n); }
    const CycloRF& Estar(std::size_t n) { return cache_->reflected_number(n); }

    Outcome t1() {
        return compare(euler_poly(pt_.n, pt_.x, params(), *cache_), euler_poly_closed(pt_.n, pt_.x, *cache_));
    }

    // E_{n,q^-1,zeta^-1}(1-x) = (-1)^n zeta q^(n+h-1) E_n(x)
    Outcome t2() {
        const std::size_t n = pt_.n;
        const CycloRF lhs = euler_poly(n, 1 - pt_.x, params(), *cache_).zeta_conj().subst_q_inverse();
        const std::size_t e = mutant_ == Mutant::T2_SIGN ? n + 1 : n;
        CycloRF rhs = qz(ring_, static_cast<long>(n) + h() - 1, 1) * euler_poly_closed(n, pt_.x, *cache_);
        rhs *= Int(sign(e));
        return compare(lhs, rhs);
    }

    // Checked on the closed-form values so the recurrence is not used to test itself.
    Outcome t3() {
        const std::size_t n = pt_.n;
        if (n == 0) {
            const CycloRF e0 = euler_number_closed(0, *cache_);
            return compare(e0 * (CycloRF::one(ring_) + qz(ring_, h(), 1)), CycloRF::constant(ring_, two_q()));
        }
        CycloRF acc(ring_);
        for (std::size_t l = 0; l <= n; ++l) {
            CycloRF term = euler_number_closed(l, *cache_);
            term.mul_q_power(static_cast<long>(l));
            acc += term * binomial(static_cast<unsigned>(n), static_cast<unsigned>(l));
        }
        const CycloRF lhs = qz(ring_, h(), 1) * acc + euler_number_closed(n, *cache_);
        return compare(lhs, CycloRF(ring_));
    }

    Outcome t4() {
        if (pt_.n == 0) throw Reject{"requires n >= 1"};
        const CycloRF lhs = qz(ring_, 2 * h(), 2) * euler_poly(pt_.n, 2, params(), *cache_);
        const long e = mutant_ == Mutant::T4_ZETA_EXPONENT ? 1 : 2;
        const CycloRF inhom = (qz(ring_, 2 * h(), e) + qz(ring_, h(), 1)) * cache_->twist_inverse(h()) * two_q();
        return compare(lhs, E(pt_.n) + inhom);
    }

    Outcome t5() {
        const CycloRF lhs = qz(ring_, h() - 1, 1) * integral_reflected_power(pt_.n, params(), *cache_);
        return compare(lhs, reflected_euler_poly(pt_.n, 2, *cache_));
    }

    CycloRF reflected_plus_two(std::size_t n, long qexp) {
        return qz(ring_, qexp, 1) * Estar(n) + CycloRF::constant(ring_, two_q());
    }

    Outcome c6() {
        if (pt_.n == 0) throw Reject{"requires n >= 1"};
        const long qexp = mutant_ == Mutant::C6_Q_EXPONENT ? h() : h() + 1;
        return compare(integral_reflected_power(pt_.n, params(), *cache_), reflected_plus_two(pt_.n, qexp));
    }

    Outcome eq12() {
        if (pt_.k > pt_.n) throw Reject{"requires k <= n"};
        const auto k = static_cast<unsigned>(pt_.k);
        const auto n = static_cast<unsigned>(pt_.n);
        return compare(bernstein(k, n, pt_.x), bernstein(n - k, n, 1 - pt_.x).subst_q_inverse());
    }

    Outcome lemma() { return compare(q_number_inv_arg(1 - pt_.x), RatFunc(1) - q_number(pt_.x)); }

    /// q^qexp zeta sum_{l <= K} C(K,l) (-1)^(K+l) E*_{N-l}, or the k = 0 form.
    CycloRF reflected_side(std::size_t N, std::size_t K, bool k_zero, long qexp, bool drop_k_sign = false) {
        if (k_zero) return reflected_plus_two(N, qexp);
        CycloRF acc(ring_);
        for (std::size_t l = 0; l <= K; ++l) {
            const std::size_t e = drop_k_sign ? l : K + l;
            acc += Estar(N - l) * (binomial(static_cast<unsigned>(K), static_cast<unsigned>(l)) * sign(e));
        }
        return qz(ring_, qexp, 1) * acc;
    }

    /// sum_{l <= N-K} (-1)^l C(N-K, l) E_{K+l}
    CycloRF moment_side(std::size_t N, std::size_t K) {
        CycloRF acc(ring_);
        for (std::size_t l = 0; l + K <= N; ++l) {
            acc += E(K + l) * (binomial(static_cast<unsigned>(N - K), static_cast<unsigned>(l)) * sign(l));
        }
        return acc;
    }

    Outcome t7() {
        const std::size_t n = pt_.n, k = pt_.k;
        if (n <= k) throw Reject{"requires n > k"};
        const bool mutated = mutant_ == Mutant::T7_SIGN;
        const Int c = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));

        // Integral of B_{k,n} by its moment expansion.
        const CycloRF lhs = integrate_moments(bernstein_moment_poly(static_cast<unsigned>(k), static_cast<unsigned>(n)),
                                              params(), *cache_);
        CycloRF rhs = reflected_side(n, k, k == 0, h() + 1, mutated);
        if (k > 0) rhs *= c;
        if (Outcome o = compare(lhs, rhs); !o.equal) return o;

        // The same statement with C(n,k) divided out.
        return compare(moment_side(n, k), reflected_side(n, k, k == 0, h() + 1, mutated));
    }

    Outcome product(std::size_t arity, bool integral_form, bool bump_q) {
        const auto& ns = pt_.ns;
        if (arity != 0 && ns.size() != arity) throw Reject{"requires exactly " + std::to_string(arity) + " degrees"};
        if (ns.size() < 2) throw Reject{"requires s >= 2"};
        const std::size_t s = ns.size(), k = pt_.k, N = total(ns);
        if (N <= s * k) throw Reject{"requires n_1 + ... + n_s > s*k"};
        const long qexp = bump_q ? h() + 2 : h() + 1;

        if (!integral_form) return compare(moment_side(N, s * k), reflected_side(N, s * k, k == 0, qexp));

        if (k > *std::min_element(ns.begin(), ns.end())) throw Reject{"requires k <= n_i"};
        MomentPoly mp{{Rat(1)}};
        Int c = 1;
        for (std::size_t ni : ns) {
            mp *= bernstein_moment_poly(static_cast<unsigned>(k), static_cast<unsigned>(ni));
            c *= binomial(static_cast<unsigned>(ni), static_cast<unsigned>(k));
        }
        const CycloRF lhs = integrate_moments(mp, params(), *cache_);
        CycloRF rhs = reflected_side(N, s * k, k == 0, qexp);
        if (k > 0) rhs *= c;
        return compare(lhs, rhs);
    }

    const Point& pt_;
    Mutant mutant_;
    EulerCache* cache_;
    CycloRing ring_;
};

}  // namespace

std::string_view theorem_name(TheoremId id) {
    for (const auto& n : kNames)
        if (n.id == id) return n.text;
    return "UNKNOWN";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
    for (const auto& n : kNames)
        if (n.text == name) return n.id;
    // Short prefixes such as "T2" or "C11".
    for (const auto& n : kNames) {
        if (n.text.size() > name.size() && n.text.starts_with(name) && n.text[name.size()] == '_') return n.id;
    }
    return std::nullopt;
}

bool parameter_free(TheoremId id) { return id == TheoremId::EQ12_SYMMETRY || id == TheoremId::LEMMA_COMPLEMENT; }

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Rejected: return "rejected";
    }
    return "unknown";
}

std::string_view mutant_name(Mutant m) {
    switch (m) {
        case Mutant::None: return "none";
        case Mutant::C6_Q_EXPONENT: return "C6_Q_EXPONENT";
        case Mutant::T2_SIGN: return "T2_SIGN";
        case Mutant::T4_ZETA_EXPONENT: return "T4_ZETA_EXPONENT";
        case Mutant::T7_SIGN: return "T7_SIGN";
        case Mutant::T8_Q_EXPONENT: return "T8_Q_EXPONENT";
    }
    return "unknown";
}

std::optional<Mutant> parse_mutant(std::string_view name) {
    if (name == "none") return Mutant::None;
    for (Mutant m : kAllMutants)
        if (mutant_name(m) == name) return m;
    return std::nullopt;
}

EulerCache& Verifier::cache(const EulerParams& params) {
    std::lock_guard lock(mu_);
    auto& slot = caches_[params];
    if (!slot) slot = std::make_unique<EulerCache>(params);
    return *slot;
}

IdentityReport Verifier::verify(TheoremId id, const Point& pt) {
    const auto start = std::chrono::steady_clock::now();
    IdentityReport rep;
    rep.theorem = id;
    rep.point = pt;
    if (id == TheoremId::C9_MOMENT_FORM) rep.note = kC9Note;

    try {
        EulerCache* c = nullptr;
        if (!parameter_free(id)) {
            pt.params().validate();
            c = &cache(pt.params());
        }
        Checker checker(pt, mutant_, c);
        Outcome o = checker.run(id);
        if (!o.equal) {
            rep.verdict = Verdict::Fail;
            rep.lhs = std::move(o.lhs);
            rep.rhs = std::move(o.rhs);
        }
    } catch (const Reject& r) {
        rep.verdict = Verdict::Rejected;
        rep.reason = r.reason;
    } catch (const ParameterError& e) {
        rep.verdict = Verdict::Rejected;
        rep.reason = e.what();
    } catch (const std::exception& e) {
        rep.verdict = Verdict::Fail;
        rep.reason = std::string("exception: ") + e.what();
    }
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

void nondecreasing_tuples(std::size_t s, std::size_t lo, std::size_t hi, std::vector<std::size_t>& cur,
                          std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == s) {
        out.push_back(cur);
        return;
    }
    for (std::size_t v = lo; v <= hi; ++v) {
        cur.push_back(v);
        nondecreasing_tuples(s, v, hi, cur, out);
        cur.pop_back();
    }
}

bool wanted(const GridSpec& g, TheoremId id) {
    return g.theorems.empty() || std::find(g.theorems.begin(), g.theorems.end(), id) != g.theorems.end();
}

}  // namespace

std::vector<Job> enumerate_grid(const GridSpec& g) {
    std::vector<Job> jobs;
    std::vector<EulerParams> triples;
    for (auto p : g.primes)
        for (auto m : g.levels)
            for (long h = g.h_min; h <= g.h_max; ++h) triples.push_back({p, m, h});
    if (triples.empty()) return jobs;

    std::vector<std::vector<std::size_t>> tuples;
    for (std::size_t s = g.s_min; s <= g.s_max; ++s) {
        std::vector<std::size_t> cur;
        nondecreasing_tuples(s, 0, g.ni_max, cur, tuples);
    }

    auto add = [&](TheoremId id, Point pt) {
        if (wanted(g, id)) jobs.emplace_back(id, std::move(pt));
    };

    for (const auto& ep : triples) {
        Point base;
        base.p = ep.p;
        base.m = ep.m;
        base.h = ep.h;
        for (std::size_t n = 0; n <= g.n_max; ++n) {
            Point pt = base;
            pt.n = n;
            add(TheoremId::T3_RECURRENCE, pt);
            add(TheoremId::T5_REFLECT_INTEGRAL, pt);
            if (n >= 1) {
                add(TheoremId::T4_SHIFT2, pt);
                add(TheoremId::C6_INTEGRAL, pt);
            }
            for (long x = g.x_min; x <= g.x_max; ++x) {
                Point px = pt;
                px.x = x;
                add(TheoremId::T1_CLOSED_EQ_EXPANSION, px);
                add(TheoremId::T2_REFLECTION, px);
            }
            for (std::size_t k = 0; k < n; ++k) {
                Point pk = pt;
                pk.k = k;
                add(TheoremId::T7_BERNSTEIN_INTEGRAL, pk);
            }
        }
        for (const auto& ns : tuples) {
            const std::size_t N = total(ns);
            for (std::size_t k = 0; k <= ns.front(); ++k) {
                if (N <= ns.size() * k) continue;
                Point pt = base;
                pt.ns = ns;
                pt.k = k;
                if (ns.size() == 2) {
                    add(TheoremId::T8_PRODUCT2, pt);
                    add(TheoremId::C9_MOMENT_FORM, pt);
                }
                add(TheoremId::T10_PRODUCT_S, pt);
                add(TheoremId::C11_MOMENT_FORM_S, pt);
            }
        }
    }

    Point free_pt;
    free_pt.p = 0;
    free_pt.m = 0;
    free_pt.h = 0;
    for (long x = g.x_min; x <= g.x_max; ++x) {
        Point pt = free_pt;
        pt.x = x;
        add(TheoremId::LEMMA_COMPLEMENT, pt);
        for (std::size_t n = 0; n <= g.n_max; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                Point pk = pt;
                pk.n = n;
                pk.k = k;
                add(TheoremId::EQ12_SYMMETRY, pk);
            }
        }
    }

    std::sort(jobs.begin(), jobs.end());
    return jobs;
}

GridResult run_jobs(const std::vector<Job>& jobs, const RunOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    Verifier verifier(opts.mutant);
    GridResult result;
    result.reports.resize(jobs.size());

    // Jobs sharing a parameter triple run in order on one worker so the
    // cache is extended once, not raced.
    std::vector<std::vector<std::size_t>> groups;
    std::map<EulerParams, std::size_t> group_of;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto key = jobs[i].second.params();
        auto [it, inserted] = group_of.try_emplace(key, groups.size());
        if (inserted) groups.emplace_back();
        groups[it->second].push_back(i);
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t g; (g = next.fetch_add(1)) < groups.size();) {
            for (std::size_t i : groups[g]) result.reports[i] = verifier.verify(jobs[i].first, jobs[i].second);
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(groups.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    std::vector<std::size_t> order(jobs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return jobs[a] < jobs[b]; });
    std::vector<IdentityReport> sorted;
    sorted.reserve(jobs.size());
    for (std::size_t i : order) sorted.push_back(std::move(result.reports[i]));
    result.reports = std::move(sorted);

    for (const auto& r : result.reports) {
        auto& by = result.by_theorem[r.theorem];
        switch (r.verdict) {
            case Verdict::Pass: ++by.passed, ++result.total.passed; break;
            case Verdict::Fail: ++by.failed, ++result.total.failed; break;
            case Verdict::Rejected: ++by.rejected, ++result.total.rejected; break;
        }
    }
    result.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

GridResult run_grid(const GridSpec& grid, const RunOptions& opts) { return run_jobs(enumerate_grid(grid), opts); }

// ---------------------------------------------------------------------------

CrosscheckReport numeric_crosscheck(std::size_t n_max, const EulerParams& params, const PadicConfig& cfg,
                                    const std::vector<std::uint32_t>& levels) {
    cfg.validate();
    params.validate();
    CrosscheckReport rep{params, cfg, {}, {}};
    EulerCache cache(params);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const PadicExt exact = specialize(cache.number(n), cfg);
        const ConvergenceProbe probe = convergence_probe(n, params, cfg, levels);
        bool monotone = true;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            const std::uint32_t v = (exact - probe.values[i]).valuation();
            if (i > 0 && v < rep.rows.back().valuation) monotone = false;
            rep.rows.push_back({n, levels[i], v});
        }
        if (!monotone) rep.non_monotone.push_back(n);
    }
    return rep;
}

}  // namespace qeuler

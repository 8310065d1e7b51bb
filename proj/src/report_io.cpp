#include "qeuler/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace qeuler {

namespace {

enum Field : unsigned { P = 1, N = 2, K = 4, X = 8, NS = 16 };

unsigned fields_of(TheoremId id) {
    switch (id) {
        case TheoremId::T1_CLOSED_EQ_EXPANSION:
        case TheoremId::T2_REFLECTION: return P | N | X;
        case TheoremId::T3_RECURRENCE:
        case TheoremId::T4_SHIFT2:
        case TheoremId::T5_REFLECT_INTEGRAL:
        case TheoremId::C6_INTEGRAL: return P | N;
        case TheoremId::T7_BERNSTEIN_INTEGRAL: return P | N | K;
        case TheoremId::T8_PRODUCT2:
        case TheoremId::C9_MOMENT_FORM:
        case TheoremId::T10_PRODUCT_S:
        case TheoremId::C11_MOMENT_FORM_S: return P | NS | K;
        case TheoremId::EQ12_SYMMETRY: return N | K | X;
        case TheoremId::LEMMA_COMPLEMENT: return X;
    }
    return P | N | K | X | NS;
}

std::string fmt_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", ms);
    return buf;
}

}  // namespace

nlohmann::json point_to_json(TheoremId id, const Point& pt) {
    const unsigned f = fields_of(id);
    nlohmann::json j = nlohmann::json::object();
    if (f & P) {
        j["p"] = pt.p;
        j["m"] = pt.m;
        j["h"] = pt.h;
    }
    if (f & NS) {
        j["s"] = pt.ns.size();
        j["ns"] = pt.ns;
    }
    if (f & N) j["n"] = pt.n;
    if (f & K) j["k"] = pt.k;
    if (f & X) j["x"] = pt.x;
    return j;
}

std::string point_label(TheoremId id, const Point& pt) {
    const unsigned f = fields_of(id);
    std::ostringstream os;
    const char* sep = "";
    auto put = [&](const char* key, auto v) {
        os << sep << key << '=' << v;
        sep = " ";
    };
    if (f & P) {
        put("p", pt.p);
        put("m", pt.m);
        put("h", pt.h);
    }
    if (f & NS) {
        std::string ns;
        for (std::size_t i = 0; i < pt.ns.size(); ++i) ns += (i ? "," : "") + std::to_string(pt.ns[i]);
        put("ns", ns);
    }
    if (f & N) put("n", pt.n);
    if (f & K) put("k", pt.k);
    if (f & X) put("x", pt.x);
    return os.str();
}

nlohmann::json report_to_json(const IdentityReport& rep) {
    nlohmann::json j;
    j["theorem"] = theorem_name(rep.theorem);
    j["point"] = point_to_json(rep.theorem, rep.point);
    j["passed"] = rep.passed();
    j["verdict"] = verdict_name(rep.verdict);
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    if (rep.verdict == Verdict::Fail) {
        j["lhs"] = rep.lhs;
        j["rhs"] = rep.rhs;
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

nlohmann::json reports_to_json(const GridResult& res) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : res.reports) arr.push_back(report_to_json(r));
    return arr;
}

std::string summary_table(const GridResult& res) {
    std::ostringstream os;
    char line[128];
    std::snprintf(line, sizeof line, "%-24s %8s %8s %8s\n", "theorem", "passed", "failed", "rejected");
    os << line;
    for (TheoremId id : kAllTheorems) {
        auto it = res.by_theorem.find(id);
        if (it == res.by_theorem.end()) continue;
        std::snprintf(line, sizeof line, "%-24s %8zu %8zu %8zu\n", std::string(theorem_name(id)).c_str(),
                      it->second.passed, it->second.failed, it->second.rejected);
        os << line;
    }
    std::snprintf(line, sizeof line, "%-24s %8zu %8zu %8zu\n", "total", res.total.passed, res.total.failed,
                  res.total.rejected);
    os << line;
    os << "elapsed " << fmt_ms(res.elapsed_ms) << " ms\n";

    constexpr std::size_t kMaxListed = 20;
    constexpr std::size_t kMaxForm = 160;
    auto clip = [&](const std::string& s) { return s.size() <= kMaxForm ? s : s.substr(0, kMaxForm) + " ..."; };
    std::size_t listed = 0, unlisted = 0;
    for (const auto& r : res.reports) {
        if (r.verdict == Verdict::Pass) continue;
        if (listed == kMaxListed) {
            ++unlisted;
            continue;
        }
        ++listed;
        os << verdict_name(r.verdict) << ": " << theorem_name(r.theorem) << ' ' << point_label(r.theorem, r.point);
        if (!r.reason.empty()) os << " (" << r.reason << ')';
        os << '\n';
        if (r.verdict == Verdict::Fail && !r.lhs.empty()) {
            os << "  lhs: " << clip(r.lhs) << "\n  rhs: " << clip(r.rhs) << '\n';
        }
    }
    if (unlisted) os << "... " << unlisted << " more, see the JSON report\n";
    return os.str();
}

nlohmann::json crosscheck_to_json(const CrosscheckReport& rep) {
    nlohmann::json j;
    j["params"] = {{"p", rep.params.p}, {"m", rep.params.m}, {"h", rep.params.h}};
    j["K"] = rep.cfg.K;
    j["q0"] = rep.cfg.q0;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rep.rows) j["rows"].push_back({{"n", r.n}, {"N", r.N}, {"valuation", r.valuation}});
    j["non_monotone"] = rep.non_monotone;
    j["monotone"] = rep.monotone();
    return j;
}

std::string crosscheck_csv(const CrosscheckReport& rep) {
    std::ostringstream os;
    os << "n,N,valuation\n";
    for (const auto& r : rep.rows) os << r.n << ',' << r.N << ',' << r.valuation << '\n';
    return os.str();
}

std::string crosscheck_text(const CrosscheckReport& rep) {
    std::ostringstream os;
    os << "p=" << rep.params.p << " m=" << rep.params.m << " h=" << rep.params.h << " K=" << rep.cfg.K
       << " q0=" << rep.cfg.q0 << '\n';
    char line[64];
    std::snprintf(line, sizeof line, "%4s %4s %10s\n", "n", "N", "valuation");
    os << line;
    for (const auto& r : rep.rows) {
        std::snprintf(line, sizeof line, "%4zu %4u %10u\n", r.n, r.N, r.valuation);
        os << line;
    }
    if (rep.monotone()) {
        os << "valuations non-decreasing in N for every n\n";
    } else {
        os << "valuations decrease for n =";
        for (auto n : rep.non_monotone) os << ' ' << n;
        os << '\n';
    }
    return os.str();
}

}  // namespace qeuler

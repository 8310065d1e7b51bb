#include "qeuler/cli.hpp"

#include "qeuler/errors.hpp"
#include "qeuler/identity.hpp"
#include "qeuler/report_io.hpp"
#include "qeuler/text_format.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace qeuler::cli {

namespace {

enum class Format { Text, Json, Csv };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::uint32_t p = 3;
    std::uint32_t m = 1;
    long h = 1;
    Format format = Format::Text;
    std::string output;
    std::string at_q;

    EulerParams params() const {
        EulerParams ep{p, m, h};
        ep.validate();
        return ep;
    }
};

void add_params(CLI::App* cmd, Common& c) {
    cmd->add_option("--p", c.p, "odd prime p")->capture_default_str();
    cmd->add_option("--m", c.m, "zeta has order p^m")->capture_default_str();
    cmd->add_option("--h", c.h, "integer weight h")->capture_default_str();
}

void add_output(CLI::App* cmd, Common& c, bool with_csv = true) {
    std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
    if (with_csv) formats.emplace("csv", Format::Csv);
    cmd->add_option("--format", c.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->capture_default_str();
    cmd->add_option("--output", c.output, "write to this file instead of standard output");
}

void add_at_q(CLI::App* cmd, Common& c) {
    cmd->add_option("--at-q", c.at_q, "also evaluate every coefficient at this rational q");
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.output);
    if (!f || !(f << text) || !f.flush()) throw IoError("cannot write " + c.output);
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string r = "\"";
    for (char ch : s) {
        if (ch == '"') r += '"';
        r += ch;
    }
    return r + '"';
}

nlohmann::json cyclo_json(const CycloRF& a) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const RatFunc& c : a.coeffs()) {
        coeffs.push_back({{"num", to_string(c.numerator())}, {"den", to_string(c.denominator())}});
    }
    return coeffs;
}

std::string rat_string(const Rat& r) { return r.get_str(); }

/// Coefficients at q = q0, joined by "; ".
std::vector<std::string> at_q_values(const CycloRF& a, const Rat& q0) {
    std::vector<std::string> vals;
    for (const RatFunc& c : a.eval_at_q(q0).coeffs()) vals.push_back(rat_string(c.eval(0)));
    return vals;
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) r += sep;
        r += v[i];
    }
    return r;
}

/// One row per labelled CycloRF value.
struct Row {
    nlohmann::json key;
    std::string label;
    CycloRF value;
};

std::string render_rows(const Common& c, const std::vector<std::string>& key_names, const std::vector<Row>& rows,
                        const nlohmann::json& meta) {
    std::optional<Rat> q0;
    if (!c.at_q.empty()) q0 = parse_rat(c.at_q);

    std::ostringstream os;
    switch (c.format) {
        case Format::Json: {
            nlohmann::json j = meta;
            j["rows"] = nlohmann::json::array();
            for (const auto& r : rows) {
                nlohmann::json row = r.key;
                row["value"] = to_string(r.value);
                row["coeffs"] = cyclo_json(r.value);
                if (q0) row["at_q"] = at_q_values(r.value, *q0);
                j["rows"].push_back(std::move(row));
            }
            if (q0) j["q"] = rat_string(*q0);
            os << j.dump(2) << '\n';
            break;
        }
        case Format::Csv: {
            os << join(key_names, ",") << ",value" << (q0 ? ",at_q" : "") << '\n';
            for (const auto& r : rows) {
                for (const auto& k : key_names) os << r.key.at(k).dump() << ',';
                os << csv_cell(to_string(r.value));
                if (q0) os << ',' << csv_cell(join(at_q_values(r.value, *q0), "; "));
                os << '\n';
            }
            break;
        }
        case Format::Text: {
            for (const auto& r : rows) {
                os << r.label << ": " << to_string(r.value);
                if (q0) os << "  [q=" << rat_string(*q0) << ": " << join(at_q_values(r.value, *q0), "; ") << ']';
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

nlohmann::json params_meta(const EulerParams& ep) { return {{"p", ep.p}, {"m", ep.m}, {"h", ep.h}}; }

std::vector<std::size_t> parse_size_list(const std::string& text, const char* what) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size() || item.empty() || v < 0) {
            throw ParameterError(std::string("bad ") + what + " list entry '" + item + "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and p-adic computation of twisted (h, q)-Euler numbers and q-Bernstein integrals"};
    app.name("qeuler");
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", "qeuler 0.1.0");

    // euler
    Common eu;
    std::size_t eu_n = 5;
    std::optional<long> eu_x;
    bool eu_closed = false;
    auto* euler = app.add_subcommand("euler", "table of E^(h)_{j,q,zeta}(x) for j = 0..n");
    add_params(euler, eu);
    euler->add_option("--n", eu_n, "largest degree")->capture_default_str();
    euler->add_option("--x", eu_x, "integer argument of the Euler polynomial (default: numbers, x = 0)");
    euler->add_flag("--closed", eu_closed, "use the closed form instead of the recurrence");
    add_at_q(euler, eu);
    add_output(euler, eu);

    // bernstein
    Common be;
    unsigned be_k = 0, be_n = 1;
    long be_x = 2;
    auto* bern = app.add_subcommand("bernstein", "q-Bernstein polynomial B_{k,n}(x, q) at an integer x");
    bern->add_option("--k", be_k, "index k <= n")->capture_default_str();
    bern->add_option("--n", be_n, "degree n")->capture_default_str();
    bern->add_option("--x", be_x, "integer argument")->capture_default_str();
    add_at_q(bern, be);
    add_output(bern, be);

    // integrate
    Common in;
    std::size_t in_k = 0;
    std::string in_ns = "2";
    auto* integ = app.add_subcommand(
        "integrate", "fermionic q-integral of B_{k,n_1} ... B_{k,n_s} q^((h-1)x) zeta^x, with both evaluations");
    add_params(integ, in);
    integ->add_option("--k", in_k, "common Bernstein index k")->capture_default_str();
    integ->add_option("--ns", in_ns, "comma-separated degrees n_1,...,n_s")->capture_default_str();
    add_at_q(integ, in);
    add_output(integ, in);

    // verify
    GridSpec grid;
    std::string theorems, out_dir, mutant = "none";
    unsigned threads = 1;
    bool list_only = false;
    auto* verify = app.add_subcommand("verify", "run the exact identity suite over a parameter grid");
    verify->add_option("--theorems", theorems, "comma-separated theorem ids or prefixes (default: all)");
    verify->add_option("--primes", grid.primes, "primes p")->delimiter(',')->capture_default_str();
    verify->add_option("--levels", grid.levels, "levels m")->delimiter(',')->capture_default_str();
    verify->add_option("--h-min", grid.h_min, "smallest weight")->capture_default_str();
    verify->add_option("--h-max", grid.h_max, "largest weight")->capture_default_str();
    verify->add_option("--n-max", grid.n_max, "degree bound")->capture_default_str();
    verify->add_option("--x-min", grid.x_min, "smallest polynomial argument")->capture_default_str();
    verify->add_option("--x-max", grid.x_max, "largest polynomial argument")->capture_default_str();
    verify->add_option("--s-min", grid.s_min, "smallest product arity")->capture_default_str();
    verify->add_option("--s-max", grid.s_max, "largest product arity")->capture_default_str();
    verify->add_option("--ni-max", grid.ni_max, "bound on each n_i in products")->capture_default_str();
    verify->add_option("--threads", threads, "worker threads")->capture_default_str();
    verify->add_option("--output-dir", out_dir, "directory for verify_report.json and verify_summary.txt")
        ->envname("QEULER_OUTPUT_DIR");
    verify->add_flag("--list", list_only, "print the enumerated points and exit");
    verify->add_option("--inject-mutant", mutant)->group("");

    // crosscheck
    Common cc;
    std::size_t cc_n = 4;
    std::uint32_t cc_K = 12;
    std::optional<std::uint64_t> cc_q0;
    std::vector<std::uint32_t> cc_levels;
    auto* cross = app.add_subcommand("crosscheck", "p-adic valuations of exact minus truncated-integral values");
    add_params(cross, cc);
    cross->add_option("--n", cc_n, "largest degree")->capture_default_str();
    cross->add_option("--K", cc_K, "precision: work modulo p^K")->capture_default_str();
    cross->add_option("--q0", cc_q0, "residue of q, must be 1 mod p (default 1+p)");
    cross->add_option("--levels", cc_levels, "truncation levels N (default m+1,m+2,m+3)")->delimiter(',');
    add_output(cross, cc);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInvalidParameters;
    }

    try {
        if (*euler) {
            const EulerParams ep = eu.params();
            EulerCache cache(ep);
            std::vector<Row> rows;
            for (std::size_t j = 0; j <= eu_n; ++j) {
                CycloRF v = eu_x ? (eu_closed ? euler_poly_closed(j, *eu_x, cache) : euler_poly(j, *eu_x, ep, cache))
                                 : (eu_closed ? euler_number_closed(j, cache) : cache.number(j));
                rows.push_back({{{"n", j}}, std::to_string(j), std::move(v)});
            }
            nlohmann::json meta = params_meta(ep);
            if (eu_x) meta["x"] = *eu_x;
            emit(eu, render_rows(eu, {"n"}, rows, meta), out);
        } else if (*bern) {
            const RatFunc b = bernstein(be_k, be_n, be_x);
            const CycloRF v = CycloRF::constant(CycloRing{3, 0}, b);
            std::vector<Row> rows{{{{"k", be_k}, {"n", be_n}, {"x", be_x}}, "B", v}};
            emit(be, render_rows(be, {"k", "n", "x"}, rows, nlohmann::json::object()), out);
        } else if (*integ) {
            const EulerParams ep = in.params();
            const auto ns = parse_size_list(in_ns, "--ns");
            if (ns.empty()) throw ParameterError("--ns needs at least one degree");
            EulerCache cache(ep);
            MomentPoly mp{{Rat(1)}};
            std::size_t N = 0;
            for (std::size_t ni : ns) {
                mp *= bernstein_moment_poly(static_cast<unsigned>(in_k), static_cast<unsigned>(ni));
                N += ni;
            }
            std::vector<Row> rows{{{{"form", "moments"}}, "moments", integrate_moments(mp, ep, cache)}};
            // Closed form through reflected Euler numbers.
            const std::size_t K = ns.size() * in_k;
            if (N > K) {
                CycloRF rhs(ep.ring());
                if (in_k == 0) {
                    rhs = integral_reflected_power_closed(N, ep, cache);
                } else {
                    Int c = 1;
                    for (std::size_t ni : ns) c *= binomial(static_cast<unsigned>(ni), static_cast<unsigned>(in_k));
                    for (std::size_t l = 0; l <= K; ++l) {
                        Int b = binomial(static_cast<unsigned>(K), static_cast<unsigned>(l));
                        if ((K + l) % 2) b = -b;
                        rhs += cache.reflected_number(N - l) * b;
                    }
                    rhs.mul_q_power(ep.h + 1);
                    rhs.mul_zeta_power(1);
                    rhs *= c;
                }
                rows.push_back({{{"form", "reflected"}}, "reflected", std::move(rhs)});
            }
            nlohmann::json meta = params_meta(ep);
            meta["k"] = in_k;
            meta["ns"] = ns;
            emit(in, render_rows(in, {"form"}, rows, meta), out);
        } else if (*verify) {
            const auto mut = parse_mutant(mutant);
            if (!mut) throw ParameterError("unknown mutant '" + mutant + "'");
            if (!theorems.empty()) {
                std::stringstream ss(theorems);
                for (std::string t; std::getline(ss, t, ',');) {
                    auto id = parse_theorem(t);
                    if (!id) throw ParameterError("unknown theorem '" + t + "'");
                    grid.theorems.push_back(*id);
                }
            }
            for (auto p : grid.primes) EulerParams{p, 0, 0}.validate();
            if (grid.s_min < 2) throw ParameterError("--s-min must be >= 2");

            const auto jobs = enumerate_grid(grid);
            if (list_only) {
                for (const auto& [id, pt] : jobs) out << theorem_name(id) << ' ' << point_label(id, pt) << '\n';
                return kOk;
            }
            const GridResult res = run_jobs(jobs, {threads, *mut});
            const std::string summary = summary_table(res);

            namespace fs = std::filesystem;
            const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
            std::error_code ec;
            fs::create_directories(dir, ec);
            {
                std::ofstream jf(dir / "verify_report.json");
                if (!jf || !(jf << reports_to_json(res).dump(1) << '\n') || !jf.flush()) {
                    throw IoError("cannot write " + (dir / "verify_report.json").string());
                }
                std::ofstream sf(dir / "verify_summary.txt");
                if (!sf || !(sf << summary) || !sf.flush()) {
                    throw IoError("cannot write " + (dir / "verify_summary.txt").string());
                }
            }
            out << summary;
            return res.total.failed == 0 ? kOk : kIdentityFailure;
        } else if (*cross) {
            const EulerParams ep = cc.params();
            PadicConfig cfg{ep.p, cc_K, ep.m, cc_q0.value_or(std::uint64_t{1} + ep.p)};
            if (cc_K < 2) throw ParameterError("--K must be >= 2");
            cfg.validate();
            if (cc_levels.empty()) cc_levels = {ep.m + 1, ep.m + 2, ep.m + 3};
            const CrosscheckReport rep = numeric_crosscheck(cc_n, ep, cfg, cc_levels);
            std::string text;
            switch (cc.format) {
                case Format::Json: text = crosscheck_to_json(rep).dump(2) + "\n"; break;
                case Format::Csv: text = crosscheck_csv(rep); break;
                case Format::Text: text = crosscheck_text(rep); break;
            }
            emit(cc, text, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::invalid_argument& e) {  // ParameterError, ParseError
        err << "error: " << e.what() << '\n';
        return kInvalidParameters;
    } catch (const std::domain_error& e) {  // poles at --at-q, non-units
        err << "error: " << e.what() << '\n';
        return kInvalidParameters;
    }
    return kOk;
}

}  // namespace qeuler::cli

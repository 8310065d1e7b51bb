#include "qeuler/cli.hpp"
#include "qeuler/cyclo.hpp"
#include "qeuler/text_format.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qeuler;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("qeuler_cli_test_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p);
    return {std::istreambuf_iterator<char>(f), {}};
}

const std::vector<std::string> kSmallGrid = {"--primes", "3", "--levels", "1", "--h-min", "1", "--h-max", "1",
                                             "--n-max", "3", "--x-min", "0", "--x-max", "1", "--ni-max", "2"};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("cli: euler table") {
    auto r = run({"euler", "--p", "3", "--m", "1", "--h", "1", "--n", "0"});
    CHECK(r.code == 0);
    // (1+q)/(1+q zeta) reduced modulo zeta^2 + zeta + 1
    CHECK(r.out == "0: -q^2 + 1 / q^2 - q + 1; -q^2 - q / q^2 - q + 1\n");
    const CycloRF e0 = parse_cyclo(r.out.substr(3, r.out.size() - 4), {3, 1});
    CHECK(e0 * (CycloRF::one({3, 1}) + CycloRF::zeta({3, 1}) * RatFunc::q_power(1)) ==
          CycloRF::constant({3, 1}, RatFunc(ZPoly{1, 1})));

    r = run({"euler", "--p", "3", "--m", "0", "--h", "1", "--n", "3", "--at-q", "1", "--format", "csv"});
    CHECK(r.code == 0);
    std::vector<std::string> col;
    std::istringstream ss(r.out);
    std::string line;
    std::getline(ss, line);
    CHECK(line == "n,value,at_q");
    while (std::getline(ss, line)) col.push_back(line.substr(line.rfind(',') + 1));
    CHECK(col == std::vector<std::string>{"1", "-1/2", "0", "1/4"});

    r = run({"euler", "--n", "2", "--format", "json", "--x", "-1"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["rows"].size() == 3);
    CHECK(j["x"] == -1);
    CHECK(j["rows"][1]["coeffs"].size() == 2);

    CHECK(run({"euler", "--n", "3", "--closed"}).out == run({"euler", "--n", "3"}).out);
}

TEST_CASE("cli: invalid parameters exit 2") {
    CHECK(run({"euler", "--p", "4"}).code == 2);
    CHECK(run({"euler", "--p", "3", "--m", "11"}).code == 2);
    CHECK(run({"euler", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"euler", "--at-q", "x"}).code == 2);
    CHECK(run({"bernstein", "--k", "3", "--n", "2"}).code == 2);
    CHECK(run({"crosscheck", "--q0", "2", "--p", "3"}).code == 2);
    CHECK(run({"crosscheck", "--K", "1"}).code == 2);
    CHECK(run({"crosscheck", "--levels", "0"}).code == 2);
    CHECK(run({"verify", "--theorems", "T99"}).code == 2);
    CHECK(run({"verify", "--inject-mutant", "nope"}).code == 2);
    CHECK(run({"verify", "--primes", "9"}).code == 2);
    CHECK(run({"integrate", "--ns", "a"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"euler", "--help"}).out.find("--p") != std::string::npos);
}

TEST_CASE("cli: bernstein and integrate") {
    auto r = run({"bernstein", "--k", "1", "--n", "2", "--x", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "B: -2*q^2 - 2*q / 1\n");
    r = run({"integrate", "--p", "5", "--h", "-2", "--k", "1", "--ns", "2,2"});
    CHECK(r.code == 0);
    const auto moments = r.out.substr(r.out.find(':') + 2, r.out.find('\n') - r.out.find(':') - 2);
    const auto second = r.out.substr(r.out.find('\n') + 1);
    CHECK(second.substr(second.find(':') + 2) == moments + "\n");
}

TEST_CASE("cli: crosscheck") {
    auto r = run({"crosscheck", "--p", "3", "--m", "0", "--h", "1", "--n", "0", "--levels", "2,3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,N,valuation\n0,2,12\n0,3,12\n");
    r = run({"crosscheck", "--p", "3", "--m", "1", "--h", "1", "--n", "4", "--levels", "3,4,5", "--K", "12",
             "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["monotone"] == true);
    CHECK(j["rows"].size() == 15);
}

TEST_CASE("cli: verify writes reports and honours the exit contract") {
    const auto dir = temp_dir("verify");
    auto r = run(with({"verify", "--output-dir", dir.string()}, kSmallGrid));
    CHECK(r.code == 0);
    CHECK(r.out.find("total") != std::string::npos);
    CHECK(slurp(dir / "verify_summary.txt") == r.out);
    const auto all = nlohmann::json::parse(slurp(dir / "verify_report.json"));
    CHECK(all.is_array());
    CHECK(all.size() > 50);

    r = run(with({"verify", "--theorems", "T2", "--output-dir", dir.string()}, kSmallGrid));
    CHECK(r.code == 0);
    const auto t2 = nlohmann::json::parse(slurp(dir / "verify_report.json"));
    CHECK(t2.size() == 8);
    for (const auto& row : t2) CHECK(row["theorem"] == "T2_REFLECTION");

    r = run(with({"verify", "--theorems", "C6", "--inject-mutant", "C6_Q_EXPONENT", "--output-dir", dir.string()},
                 kSmallGrid));
    CHECK(r.code == 1);

    r = run(with({"verify", "--theorems", "LEMMA", "--output-dir", "/proc/qeuler-no-such-dir"}, kSmallGrid));
    CHECK(r.code == 3);

    r = run(with({"verify", "--list"}, kSmallGrid));
    CHECK(r.code == 0);
    CHECK(r.out.find("T8_PRODUCT2 p=3 m=1 h=1 ns=1,2 k=0") != std::string::npos);

    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: output file") {
    const auto dir = temp_dir("out");
    auto r = run({"euler", "--n", "1", "--output", (dir / "e.txt").string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(dir / "e.txt").starts_with("0: "));
    CHECK(run({"euler", "--output", "/proc/qeuler-no-such-dir/e.txt"}).code == 3);
    std::filesystem::remove_all(dir);
}

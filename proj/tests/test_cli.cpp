#include <doctest.h>

#include "gwloc/cache.hpp"
#include "gwloc/cli.hpp"
#include "gwloc/localization.hpp"
#include "gwloc/relations.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using gwloc::Rational;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = gwloc::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("gwloc-test-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    std::string str() const { return path_.string(); }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

Rational json_value(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    return Rational(mpz_class(j.at("value").at("num").get<std::string>()), mpz_class(j.at("value").at("den").get<std::string>()));
}

std::string text_value(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind("value: ", 0) == 0) return line.substr(7);
    return {};
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

} // namespace

TEST_CASE("genus0 values and exit codes") {
    TempDir cache;
    const auto quintic = [&](int d) {
        return run({"--cache-dir", cache.str(), "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", std::to_string(d)});
    };
    const auto one = quintic(1);
    CHECK(one.code == 0);
    CHECK(text_value(one.out) == "2875");
    CHECK(text_value(quintic(2).out) == "4876875/8");

    const auto p1 = run({"--no-cache", "genus0", "--ambient-dim", "1", "--curve-degree", "1", "--insertions", "1,1"});
    CHECK(p1.code == 0);
    CHECK(text_value(p1.out) == "1");

    CHECK(run({"--no-cache", "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1", "--insertions", "2"}).code == 2);
    CHECK(text_value(run({"--no-cache", "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "1", "--insertions", "1"}).out) ==
          "2875");
    CHECK(run({"--no-cache", "genus0", "--ambient-dim", "4", "--degrees", "0", "--curve-degree", "1"}).code == 1);
    CHECK(run({"--no-cache", "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "0"}).code == 1);
    CHECK(run({"--no-cache", "--seed", "9", "genus0", "--ambient-dim", "2", "--curve-degree", "1", "--insertions", "2,2"}).code == 0);
}

TEST_CASE("cache hits are bit-identical") {
    TempDir cache;
    const std::vector<std::string> args{"--format", "json", "--cache-dir", cache.str(), "genus0", "--ambient-dim", "4", "--degrees", "5",
                                        "--curve-degree", "2"};
    const auto first = run(args);
    REQUIRE(first.code == 0);
    const auto second = run(args);
    REQUIRE(second.code == 0);
    CHECK(first.out == second.out);
    CHECK(fs::exists(cache / "index.ndjson"));
    int records = 0;
    for (const auto& entry : fs::directory_iterator(cache.str()))
        if (entry.path().extension() == ".json") ++records;
    CHECK(records == 1);

    std::ifstream index(cache / "index.ndjson");
    std::string line;
    int lines = 0;
    while (std::getline(index, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 1);

    const auto text = run({"--cache-dir", cache.str(), "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "2"});
    CHECK(text.out.find("cache: hit") != std::string::npos);
}

TEST_CASE("corrupt cache records are recomputed") {
    TempDir cache;
    const std::vector<std::string> args{"--format", "json", "--cache-dir", cache.str(), "genus0", "--ambient-dim", "4", "--degrees", "5",
                                        "--curve-degree", "1"};
    REQUIRE(run(args).code == 0);
    for (const auto& entry : fs::directory_iterator(cache.str()))
        if (entry.path().extension() == ".json") write_file(entry.path(), "{not json");
    const auto again = run(args);
    CHECK(again.code == 0);
    CHECK(json_value(again.out) == Rational(2875));
}

TEST_CASE("output formats encode the same fraction") {
    const std::vector<std::string> query{"genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree", "3"};
    auto with = [&](std::vector<std::string> head) {
        head.insert(head.end(), query.begin(), query.end());
        return run(head);
    };
    const auto text = with({"--no-cache"});
    const auto json = with({"--no-cache", "--format", "json"});
    const auto csv = with({"--no-cache", "--format", "csv"});
    REQUIRE(text.code == 0);
    REQUIRE(json.code == 0);
    REQUIRE(csv.code == 0);
    const Rational expected = Rational::parse("8564575000/27");
    CHECK(Rational::parse(text_value(text.out)) == expected);
    CHECK(json_value(json.out) == expected);
    const auto j = nlohmann::json::parse(json.out);
    CHECK(j.at("graph_count") == 350);
    CHECK(j.at("engine_version") == gwloc::kEngineVersion);
    CHECK(j.at("query").at("degrees") == nlohmann::json::array({5}));
    CHECK(csv.out.find(",8564575000,27,") != std::string::npos);
}

TEST_CASE("table1 subcommand") {
    TempDir cache;
    const auto three = run({"--format", "json", "--cache-dir", cache.str(), "table1", "--max-degree", "3"});
    REQUIRE(three.code == 0);
    const auto rows = nlohmann::json::parse(three.out).at("rows");
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) CHECK(row.at("consistent") == true);

    const auto four = run({"--format", "json", "--cache-dir", cache.str(), "table1", "--max-degree", "4"});
    REQUIRE(four.code == 0);
    const auto last = nlohmann::json::parse(four.out).at("rows").at(3);
    CHECK(last.at("consistent") == false);
    CHECK(gwloc::rational_from_json(last.at("corrected_genus1_gw")) == Rational::parse("382833353125/16"));
    CHECK(last.at("routes_agree") == true);

    const auto text = run({"--cache-dir", cache.str(), "table1", "--max-degree", "4"});
    CHECK(text.out.find("382833353125/16") != std::string::npos);

    CHECK(run({"table1", "--max-degree", "5"}).code == 1);
    CHECK(run({"table1", "--max-degree", "0"}).code == 1);
    TempDir files;
    write_file(files / "bad.tsv", "1\t0/1\t1/1\t0/1\n");
    CHECK(run({"--no-cache", "table1", "--max-degree", "1", "--table-file", (files / "bad.tsv").string()}).code == 1);
}

TEST_CASE("bps subcommand") {
    TempDir files;
    write_file(files / "n0.txt", "# quintic\n1 2875\n2 4876875/8\n3 8564575000/27\n");
    const auto g0 = run({"--format", "json", "bps", "--genus", "0", "--max-degree", "3", "--n0-file", (files / "n0.txt").string()});
    REQUIRE(g0.code == 0);
    const auto entries = nlohmann::json::parse(g0.out).at("entries");
    CHECK(gwloc::rational_from_json(entries.at(1).at("value")) == Rational(609250));
    CHECK(gwloc::rational_from_json(entries.at(2).at("value")) == Rational(317206375));

    write_file(files / "zero.txt", "1 0\n");
    const auto zero = run({"bps", "--genus", "0", "--max-degree", "1", "--n0-file", (files / "zero.txt").string()});
    CHECK(zero.code == 0);
    CHECK(zero.out.find("1\t0") != std::string::npos);

    TempDir cache;
    CHECK(run({"--cache-dir", cache.str(), "bps", "--genus", "0", "--max-degree", "1"}).code == 1);
    for (int d = 1; d <= 3; ++d)
        REQUIRE(run({"--quiet", "--cache-dir", cache.str(), "genus0", "--ambient-dim", "4", "--degrees", "5", "--curve-degree",
                     std::to_string(d)})
                    .code == 0);
    const auto g1 = run({"--format", "json", "--cache-dir", cache.str(), "bps", "--genus", "1", "--max-degree", "3", "--n1-from-table1"});
    REQUIRE(g1.code == 0);
    const auto n1 = nlohmann::json::parse(g1.out).at("entries");
    CHECK(gwloc::rational_from_json(n1.at(0).at("value")) == Rational(0));
    CHECK(gwloc::rational_from_json(n1.at(1).at("value")) == Rational(0));
    CHECK(gwloc::rational_from_json(n1.at(2).at("value")) == Rational(609250));

    CHECK(run({"--cache-dir", cache.str(), "bps", "--genus", "1", "--max-degree", "3"}).code == 1);
    CHECK(run({"--cache-dir", cache.str(), "bps", "--genus", "2", "--max-degree", "1"}).code == 1);
    write_file(files / "gap.txt", "1 1\n3 1\n");
    CHECK(run({"bps", "--genus", "0", "--max-degree", "3", "--n0-file", (files / "gap.txt").string()}).code == 1);
}

TEST_CASE("dims and wdvv subcommands") {
    CHECK(run({"dims", "--genus", "1", "--marks", "0", "--c1a", "0", "--half-dim", "3"}).out == "0\n");
    CHECK(run({"dims", "--genus", "1", "--marks", "2", "--c1a", "7", "--half-dim", "11"}).out == "18\n");
    CHECK(run({"dims", "--genus", "2", "--marks", "0", "--c1a", "0", "--half-dim", "3"}).code == 1);
    const auto j = nlohmann::json::parse(run({"--format", "json", "dims", "--genus", "0", "--marks", "0", "--c1a", "0", "--half-dim", "3"}).out);
    CHECK(j.at("expected_dimension") == 0);

    const auto w = nlohmann::json::parse(run({"--format", "json", "wdvv", "--max-degree", "4"}).out).at("entries");
    REQUIRE(w.size() == 4);
    CHECK(gwloc::rational_from_json(w.at(2).at("value")) == Rational(12));
    CHECK(gwloc::rational_from_json(w.at(3).at("value")) == Rational(620));
}

TEST_CASE("graphs subcommand dumps canonical forms") {
    const auto out = run({"graphs", "--ambient-dim", "4", "--curve-degree", "2", "--marks", "0"});
    CHECK(out.code == 0);
    std::size_t lines = 0;
    for (char c : out.out) lines += c == '\n';
    CHECK(lines == 60);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"genus0", "--ambient-dim", "x", "--curve-degree", "1"}).code == 1);
    CHECK(run({"--format", "yaml", "wdvv", "--max-degree", "2"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("exit code mapping") {
    CHECK(gwloc::exit_code_for(gwloc::DimensionMismatch("x")) == 2);
    CHECK(gwloc::exit_code_for(gwloc::WeightIndependenceFailure("x")) == 3);
    CHECK(gwloc::exit_code_for(gwloc::DegenerateWeights("x")) == 3);
    CHECK(gwloc::exit_code_for(gwloc::InvalidInput("x")) == 1);
    CHECK(gwloc::exit_code_for(std::runtime_error("x")) == 1);
}

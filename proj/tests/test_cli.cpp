#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aircode/cli.hpp"
#include "aircode/codec.hpp"
#include "aircode/render.hpp"

using namespace aircode;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream is(s);
    std::string line;
    while (std::getline(is, line))
        lines.push_back(line);
    return lines;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("cli_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& content) const {
        std::ofstream os(path);
        os << content;
    }
    std::string read() const {
        std::ifstream is(path);
        std::ostringstream ss;
        ss << is.rdbuf();
        return ss.str();
    }
};

}  // namespace

TEST_CASE("matrix output formats") {
    const RunResult txt = run_cli({"matrix", "12", "7"});
    REQUIRE(txt.code == 0);
    const auto lines = split_lines(txt.out);
    REQUIRE(lines.size() == 12);
    CHECK(lines[0] == "10000000");
    CHECK(lines[8] == "10001000");
    CHECK(lines[11] == "00010001");

    const RunResult csv = run_cli({"matrix", "12", "7", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(split_lines(csv.out)[0] == "1,0,0,0,0,0,0,0");

    const RunResult pbm = run_cli({"matrix", "12", "7", "--format", "pbm"});
    REQUIRE(pbm.code == 0);
    const auto plines = split_lines(pbm.out);
    REQUIRE(plines.size() == 14);
    CHECK(plines[0] == "P1");
    CHECK(plines[1] == "8 12");
    CHECK(plines[2] == "10000000");

    CHECK(run_cli({"matrix", "12", "7", "--format", "bmp"}).code == 2);
}

TEST_CASE("matrix written to a file matches stdout") {
    const TempFile f("matrix.txt");
    const RunResult direct = run_cli({"matrix", "33", "20"});
    const RunResult filed = run_cli({"matrix", "33", "20", "--out", f.path});
    REQUIRE(direct.code == 0);
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(f.read() == direct.out);
}

TEST_CASE("chain and profile emit machine-readable summaries") {
    const RunResult chain = run_cli({"chain", "12", "7"});
    REQUIRE(chain.code == 0);
    const json cj = json::parse(chain.out);
    CHECK(cj["K"] == 12);
    CHECK(cj["D"] == 7);
    CHECK(cj["U"] == 3);
    CHECK(cj["l"] == 0);
    CHECK(cj["lambdas"] == json::array({4, 0}));
    CHECK(cj["betas"] == json::array({2}));

    const RunResult prof = run_cli({"profile", "33", "20", "--k", "0"});
    REQUIRE(prof.code == 0);
    const json pj = json::parse(prof.out);
    CHECK(pj["k"] == 0);
    CHECK(pj["d_down"] == 21);
    CHECK(pj["mu"] == 12);
    CHECK(pj["p"] == 1);
    CHECK(pj["t"] == json::array({9}));

    // out of the profile domain
    CHECK(run_cli({"profile", "33", "20", "--k", "18"}).code == 2);
    CHECK(run_cli({"chain", "5", "9"}).code == 2);
}

TEST_CASE("plan json round-trips and the table renders the same plan") {
    const RunResult pj = run_cli({"plan", "33", "20"});
    REQUIRE(pj.code == 0);
    const DecodingPlan parsed = parse_plan_json(pj.out);
    CHECK(plan_table(parsed) == run_cli({"plan", "33", "20", "--format", "table"}).out);

    const json j = json::parse(pj.out);
    REQUIRE(j["receivers"].size() == 33);
    CHECK(j["receivers"][12]["case"] == "III");
    CHECK(j["receivers"][12]["tau"] == json::array({0, 9, 12}));
    CHECK(j["receivers"][12]["gamma"] == json::array({0, 9}));

    const RunResult table = run_cli({"plan", "33", "20", "--format", "table"});
    REQUIRE(table.code == 0);
    CHECK(table.out.find("R_12") != std::string::npos);
    CHECK(table.out.find("c_0,c_9,c_12") != std::string::npos);
    CHECK(table.out.find("x_0,x_9") != std::string::npos);
}

TEST_CASE("encode and decode through files") {
    const TempFile msg("message.txt");
    const TempFile code("code.txt");
    const TempFile side("side.txt");
    msg.write("1\n0\n1\n1\n1\n0\n0\n1\n1\n0\n1\n0\n");

    REQUIRE(run_cli({"encode", "12", "7", "--in", msg.path, "--out", code.path}).code == 0);

    // cross-check the produced codeword against the library
    const AirMatrix m = build_air(12, 7);
    MessageVector x;
    x.x = {1, 0, 1, 1, 1, 0, 0, 1, 1, 0, 1, 0};
    const Codeword expect = encode(x, m, PrimeField(2));
    std::istringstream cs(code.read());
    std::vector<Symbol> produced;
    long long v = 0;
    while (cs >> v)
        produced.push_back(static_cast<Symbol>(v));
    CHECK(produced == expect.c);

    side.write("0 1\n");
    const RunResult dec =
        run_cli({"decode", "12", "7", "--receiver", "4", "--code", code.path, "--side",
                 side.path});
    REQUIRE(dec.code == 0);
    const json dj = json::parse(dec.out);
    CHECK(dj["receiver"] == 4);
    CHECK(dj["value"] == 1);

    // missing side information is a decode failure, not a usage error
    const TempFile empty("empty_side.txt");
    empty.write("");
    const RunResult fail =
        run_cli({"decode", "12", "7", "--receiver", "4", "--code", code.path, "--side",
                 empty.path});
    CHECK(fail.code == 1);
    CHECK(!fail.err.empty());

    // wrong symbol count is a usage error
    const TempFile shortmsg("short.txt");
    shortmsg.write("1\n0\n1\n");
    CHECK(run_cli({"encode", "12", "7", "--in", shortmsg.path, "--out", code.path}).code == 2);
    CHECK(run_cli({"encode", "12", "7", "--in", "no_such_file", "--out", code.path}).code == 2);
}

TEST_CASE("verification subcommands") {
    const RunResult v = run_cli({"verify", "12", "7"});
    REQUIRE(v.code == 0);
    const json vj = json::parse(v.out);
    CHECK(vj["rate"] == "1/8");
    CHECK(vj["pass"] == true);
    CHECK(vj["fields"][0]["p"] == 2);

    const RunResult vf = run_cli({"verify", "15", "8", "--fields", "2,3,5"});
    REQUIRE(vf.code == 0);
    CHECK(json::parse(vf.out)["fields"].size() == 3);

    CHECK(run_cli({"verify", "5", "9"}).code == 2);

    const RunResult s = run_cli({"sweep", "--kmax", "8", "--jobs", "2"});
    REQUIRE(s.code == 0);
    const json sj = json::parse(s.out);
    CHECK(sj["instances"] == 21);
    CHECK(sj["pass"] == true);
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"matrix", "--help"}).code == 0);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"matrix", "12"}).code == 2);
    const RunResult bad = run_cli({"matrix", "12", "11"});
    CHECK(bad.code == 2);
    CHECK(!bad.err.empty());
}

TEST_CASE("json output is deterministic") {
    CHECK(run_cli({"plan", "18", "12"}).out == run_cli({"plan", "18", "12"}).out);
    CHECK(run_cli({"verify", "10", "2", "--fields", "2,5"}).out ==
          run_cli({"verify", "10", "2", "--fields", "2,5"}).out);
}

#include <doctest.h>

#include <sstream>

#include "hexflip/cli.hpp"
#include "hexflip/report_json.hpp"

using namespace hexflip;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cmat subcommand") {
    CliRun r = run({"cmat", "171", "100", "-289", "-169"});
    CHECK(r.code == 0);
    CHECK(r.out == "13\n");

    CliRun traced = run({"cmat", "2", "1", "1", "1", "--trace"});
    CHECK(traced.code == 0);
    CHECK(traced.out.substr(0, 2) == "2\n");
    CHECK(std::count(traced.out.begin(), traced.out.end(), '\n') == 1 + 3);
}

TEST_CASE("euclid subcommand") {
    CliRun r = run({"euclid", "289", "171"});
    CHECK(r.code == 0);
    CHECK(r.out.find("= 14") != std::string::npos);
    CHECK(r.out.find("[1,1,2,4,2,2,2]") != std::string::npos);
    CHECK(r.out.find("R1") != std::string::npos);
}

TEST_CASE("bundle subcommand with json round trip") {
    CliRun r = run({"bundle", "1", "0", "0", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("conjectured complexity: 6") != std::string::npos);

    CliRun j = run({"bundle", "2", "1", "1", "1", "--json"});
    CHECK(j.code == 0);
    json parsed = json::parse(j.out);
    TorusBundleReport rep = torus_bundle_report_from_json(parsed);
    CHECK(to_json(rep) == parsed);
    CHECK(rep.conjectured_complexity == 7);
}

TEST_CASE("dc subcommands") {
    CHECK(run({"dc", "0/1", "5/2"}).out == "3\n");
    CHECK(run({"dc", "inf", "2"}).out == "0\n");
    CHECK(run({"dc-triangle", "5/2"}).out == "4\n");
}

TEST_CASE("homeomorphism subcommands") {
    CHECK(run({"homeo-bundle", "1", "1", "0", "1", "1", "0", "1", "1"}).out ==
          "homeomorphic\n");
    CHECK(run({"homeo-bundle", "1", "1", "0", "1", "1", "2", "0", "1"}).out ==
          "not homeomorphic\n");
    CHECK(run({"homeo-lens", "7", "3", "7", "5"}).out == "homeomorphic\n");
    CHECK(run({"homeo-lens", "7", "3", "5", "2"}).out == "not homeomorphic\n");
}

TEST_CASE("ball and mainstream dot output") {
    CliRun ball = run({"ball", "1", "--dot"});
    CHECK(ball.code == 0);
    CHECK(ball.out.find("graph") != std::string::npos);
    CliRun ms = run({"mainstream", "2", "1", "1", "1", "--window", "1", "--dot"});
    CHECK(ms.code == 0);
    CHECK(ms.out.find("--") != std::string::npos);
}

TEST_CASE("error handling and exit codes") {
    CliRun usage = run({"cmat", "1", "2"});
    CHECK(usage.code == 2);
    CHECK(!usage.err.empty());

    CliRun unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);

    CliRun domain = run({"euclid", "6", "4"});
    CHECK(domain.code == 2);
    CHECK(domain.err.find("NotCoprime") != std::string::npos);

    CliRun notsl = run({"cmat", "1", "0", "0", "-1"});
    CHECK(notsl.code == 2);
    CHECK(notsl.err.find("NotSL2") != std::string::npos);

    CliRun badnum = run({"lens", "5", "x"});
    CHECK(badnum.code == 2);
}

TEST_CASE("verify subcommand") {
    CliRun r = run({"verify", "hyperbolic-census"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    CliRun bad = run({"verify", "no-such-suite"});
    CHECK(bad.code == 2);
}

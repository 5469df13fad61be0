#include "swc/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using swc::cli::CommandResult;
using swc::cli::dispatch;
using swc::cli::render;
using swc::cli::Status;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "swcomp_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
    const auto p = scratch(name);
    std::ofstream(p) << text;
    return p.string();
}

const char* kFive = R"({"d":2,"directions":[[1,0],[0,1],[1,1],[1,-1],[-2,1]]})";

}  // namespace

TEST_CASE("exit codes follow the status") {
    CHECK(swc::cli::exit_code(Status::Ok) == 0);
    CHECK(swc::cli::exit_code(Status::InvalidInput) == 2);
    CHECK(swc::cli::exit_code(Status::Inconclusive) == 3);
    CHECK(swc::cli::exit_code(Status::InternalError) == 4);
}

TEST_CASE("count-lines payload") {
    const CommandResult r = dispatch({"count-lines", "--direction", "1,1", "--n", "4", "--d", "2"});
    CHECK(r.status == Status::Ok);
    CHECK(render(r) == "{\"exact\":7,\"lemma1_bound\":8}\n");
    const CommandResult neg = dispatch({"count-lines", "--direction", "1,-1", "--n", "4", "--d", "2"});
    CHECK(neg.status == Status::InvalidInput);
    CHECK(neg.payload["error"]["code"] == "UnsupportedOrientation");
}

TEST_CASE("six-point example round trip") {
    const CommandResult made = dispatch({"construct", "paper-example"});
    REQUIRE(made.status == Status::Ok);
    CHECK(made.payload["verified"] == true);
    const std::string path = write("pair.json", render(made));
    const CommandResult checked = dispatch({"verify-ghost", "--pair", path});
    CHECK(checked.status == Status::Ok);
    CHECK(checked.payload["verified"] == true);

    const CommandResult pte = dispatch({"pte", "from-ghost", "--pair", path});
    REQUIRE(pte.status == Status::Ok);
    CHECK(pte.payload["degree"] == 4);
    const std::string sol = write("sol.json", render(pte));
    CHECK(dispatch({"pte", "verify", "--solution", sol}).payload["valid"] == true);
    const CommandResult red = dispatch({"pte", "reduce", "--solution", sol, "--alpha", "1,6"});
    CHECK(red.status == Status::Ok);
    CHECK(red.payload["X"][0][0] == 3);
    CHECK(dispatch({"pte", "reduce", "--solution", sol, "--alpha", "0,1"}).status == Status::InvalidInput);
    CHECK(dispatch({"pte", "reduce", "--solution", sol, "--alpha", "suggest"}).status == Status::Ok);

    // a broken pair is reported, not rejected
    auto j = made.payload;
    j["G"]["points"][0] = {9, 9};
    const std::string broken = write("broken.json", j.dump());
    const CommandResult bad = dispatch({"verify-ghost", "--pair", broken});
    CHECK(bad.status == Status::Ok);
    CHECK(bad.payload["verified"] == false);
    CHECK_FALSE(bad.payload["witness"].is_null());
}

TEST_CASE("bad input is reported as invalid-input") {
    const CommandResult missing = dispatch({"xray", "--points", "/nonexistent/missing.json", "--direction", "1,0"});
    CHECK(missing.status == Status::InvalidInput);
    CHECK(missing.payload["status"] == "invalid-input");

    const CommandResult unknown = dispatch({"frobnicate"});
    CHECK(unknown.status == Status::InvalidInput);
    REQUIRE_FALSE(unknown.diagnostics.empty());
    bool usage = false;
    for (const auto& d : unknown.diagnostics) usage = usage || d.find("Usage") != std::string::npos;
    CHECK(usage);

    CHECK(dispatch({"count-lines", "--direction", "1,x", "--n", "4", "--d", "2"}).status == Status::InvalidInput);
    CHECK(dispatch({"count-lines", "--bogus"}).status == Status::InvalidInput);
    const std::string par = write("parallel.json", R"({"d":2,"directions":[[1,0],[2,0]]})");
    const CommandResult p = dispatch({"construct", "hypercube", "--directions", par});
    CHECK(p.payload["error"]["code"] == "NotPairwiseIndependent");
}

TEST_CASE("budgets map to inconclusive") {
    const std::string dirs = write("five.json", kFive);
    const CommandResult r = dispatch({"search", "min-ghost", "--directions", dirs, "--grid", "6x5", "--offset", "0,0",
                                      "--kmax", "6", "--budget", "5"});
    CHECK(r.status == Status::Inconclusive);
    CHECK(r.payload["exhausted"] == false);
}

TEST_CASE("output is deterministic and independent of threads") {
    const std::string dirs = write("five.json", kFive);
    const std::vector<std::string> base{"search", "min-ghost", "--directions", dirs, "--grid", "6x5",
                                        "--offset", "0,0", "--kmax", "6"};
    const std::string a = render(dispatch(base));
    CHECK(a == render(dispatch(base)));
    auto threaded = base;
    threaded.insert(threaded.begin(), {"--threads", "4"});
    CHECK(render(dispatch(threaded)) == a);
    auto trailing = base;
    trailing.insert(trailing.end(), {"--threads", "3", "--seed", "12"});
    CHECK(render(dispatch(trailing)) == a);

    const std::vector<std::string> census{"coprime-census", "--p", "300", "--d", "3", "--verify-enumeration"};
    auto census4 = census;
    census4.insert(census4.begin(), {"--threads", "4"});
    CHECK(render(dispatch(census)) == render(dispatch(census4)));
}

TEST_CASE("--output and --version") {
    const auto out = scratch("out.json");
    std::filesystem::remove(out);
    const CommandResult r = dispatch({"--output", out.string(), "construct", "polygon", "--m", "4"});
    CHECK(r.status == Status::Ok);
    CHECK(r.output_path == out.string());
    const CommandResult v = dispatch({"--version"});
    CHECK(v.payload["version"] == swc::cli::kToolVersion);
    CHECK(v.payload["schema_version"] == swc::cli::kSchemaVersion);
}

TEST_CASE("bounds commands") {
    const std::string two = write("two.json", R"({"d":2,"directions":[[1,0],[0,1]]})");
    const CommandResult c =
        dispatch({"bounds", "certificate", "--m", "2", "--d", "2", "--epsilon", "1", "--n", "2", "--directions", two});
    CHECK(c.status == Status::Ok);
    CHECK(c.payload["verdict"] == "BoundFails");
    CHECK(c.payload["profile_bound"]["exact"] == "9");
    CHECK(c.payload["subset_count"]["exact"] == "6");
    const CommandResult s = dispatch({"bounds", "scan", "--d", "2", "--epsilon", "1/2", "--m-from", "2", "--m-to", "6"});
    CHECK(s.status == Status::Ok);
    CHECK(s.payload["rows"].size() == 5);
    CHECK(dispatch({"bounds", "certificate", "--m", "2", "--d", "2", "--epsilon", "0"}).status == Status::InvalidInput);
}

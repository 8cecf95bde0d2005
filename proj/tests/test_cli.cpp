#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

// Drives the installed binary end to end; expects the binary path and the
// data directory as the first two program arguments.

namespace {

std::string g_cli, g_data;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.output.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json parse(const RunResult& r) { return nlohmann::json::parse(r.output); }

}  // namespace

TEST_CASE("moments on the triangle corners") {
    auto r = run("moments --input " + g_data + "/tri.pts --max-order 3");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(doc["points"] == 3);
    CHECK(std::abs(double(doc["central"]["entries"]["20"]) - 2.0 / 3.0) < 1e-12);
    CHECK(std::abs(double(doc["central"]["entries"]["11"]) + 1.0 / 3.0) < 1e-12);
    CHECK(double(doc["raw"]["entries"]["00"]) == 3.0);
}

TEST_CASE("moments on a pgm image") {
    auto r = run("moments --input " + g_data + "/ramp.pgm --max-order 1");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(double(doc["raw"]["entries"]["00"]) == 21.0);
}

TEST_CASE("missing input exits with code 2 and names the path") {
    auto r = run("moments --input /no/such/file.pts");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("/no/such/file.pts") != std::string::npos);
}

TEST_CASE("malformed pgm exits with code 2 and a byte offset") {
    auto r = run("moments --input " + g_data + "/truncated.pgm");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("byte") != std::string::npos);
}

TEST_CASE("hu descriptor vector flips only I7 under mirroring") {
    auto a = run("invariants --input " + g_data + "/tri.pts --set hu");
    auto b = run("invariants --input " + g_data + "/tri_mirror.pts --set hu");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    auto da = parse(a)["values"], db = parse(b)["values"];
    REQUIRE(da.size() == 7);
    for (std::size_t i = 0; i < 7; ++i) {
        double va = da[i]["value"], vb = db[i]["value"];
        bool skew = da[i]["skew"];
        CHECK(skew == (da[i]["name"] == "I7"));
        if (skew)
            CHECK(std::abs(va + vb) < 1e-9 * std::max(std::abs(va), 1e-12));
        else
            CHECK(std::abs(va - vb) < 1e-9 * std::max(std::abs(va), 1e-12));
    }
}

TEST_CASE("affine descriptor vector has nineteen entries") {
    auto r = run("invariants --input " + g_data + "/tri.pts --set affine19");
    REQUIRE(r.exit_code == 0);
    CHECK(parse(r)["values"].size() == 19);
}

TEST_CASE("3d descriptor set requires and accepts a 3d shape") {
    auto r = run("invariants --input " + g_data + "/cloud3d.pts --set 3d");
    REQUIRE(r.exit_code == 0);
    CHECK(parse(r)["values"].size() == 3);
    auto bad = run("invariants --input " + g_data + "/tri.pts --set 3d");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("verify --catalog passes") {
    auto r = run("verify --catalog");
    CHECK(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(doc["pass"] == true);
    CHECK(doc["catalog"].size() == 16 + 19 + 3);
}

TEST_CASE("verify --relations reports the contradictory printed identity") {
    auto r = run("verify --relations");
    CHECK(r.exit_code == 1);  // the printed I51 = 3*I52 cannot hold
    auto doc = parse(r);
    int failing = 0;
    for (const auto& rel : doc["relations"])
        if (rel["holds"] == false) {
            ++failing;
            CHECK(rel["identity"] == "I51 = 3*I52");
        }
    CHECK(failing == 1);
}

TEST_CASE("independence report for hu") {
    auto r = run("independence --set hu --group similarity --order 3");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(doc["rank"] == 6);
    CHECK(doc["space"]["variables"] == 7);
    CHECK(doc["kept"].size() == 6);
    CHECK(doc["dropped"].size() == 1);
}

TEST_CASE("independence report for the affine nineteen") {
    auto r = run("independence --set affine19 --group affine --order 5");
    REQUIRE(r.exit_code == 0);
    auto doc = parse(r);
    CHECK(doc["space"]["variables"] == 19);
    CHECK(doc["rank"] == 15);
    CHECK(doc["kept"].size() == 15);
    CHECK(doc["dropped"].size() == 4);
}

TEST_CASE("discover reaches the attainable maximum and reruns byte-identically") {
    std::string args = "discover --group affine --order 4 --degree 4 --target 9 --seed 0";
    auto a = run(args);
    REQUIRE(a.exit_code == 0);
    auto b = run(args);
    CHECK(a.output == b.output);
    auto doc = parse(a);
    CHECK(doc["rank"] == 9);
    CHECK(doc["incomplete"] == false);
}

TEST_CASE("discover exits 1 when the target is out of reach") {
    auto r = run("discover --group affine --order 3 --degree 3 --target 10");
    CHECK(r.exit_code == 1);
    CHECK(parse(r)["incomplete"] == true);
}

TEST_CASE("discover exits 3 when the enumeration budget is exceeded") {
    auto r = run("discover --group affine --order 4 --degree 4 --budget 10");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("budget exceeded") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <gmi-binary> <data-dir>\n", argv[0]);
        return 1;
    }
    g_cli = argv[1];
    g_data = argv[2];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "domtri/cli.hpp"
#include "domtri/generators.hpp"
#include "domtri/io.hpp"

using namespace domtri;
using json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir() {
    auto p = std::filesystem::temp_directory_path() / "domtri_cli_test";
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("dominate on an octahedron file") {
    auto dir = scratch_dir();
    write(dir / "oct.json", to_json(fixture("octahedron")));
    auto r = invoke({"dominate", "--input", (dir / "oct.json").string()});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["strategy"] == "ExactSmallInput");
    CHECK(j["size"] == 2);
    CHECK(j["q"] == 6);
}

TEST_CASE("reduce with trace") {
    auto r = invoke({"reduce", "--trace", "--name", "fig2d"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["steps"].size() == 1);
    CHECK(j["steps"][0]["case_tag"] == "TwoBad.AdjacentOnlyU");
    CHECK(j["steps"][0].contains("trace"));
    auto plain = json::parse(invoke({"reduce", "--name", "fig2d"}).out);
    CHECK_FALSE(plain["steps"][0].contains("trace"));
}

TEST_CASE("verify, color, oracle, stats") {
    CHECK(json::parse(invoke({"verify", "--set", "0,3", "--name", "fig2a"}).out)["dominates"] == true);
    CHECK(json::parse(invoke({"verify", "--set", "0", "--name", "fig2a"}).out)["dominates"] == false);
    auto c = json::parse(invoke({"color", "--name", "octahedron"}).out);
    CHECK(c["classes"].size() == 3);
    auto o = json::parse(invoke({"oracle", "--exact", "--name", "icosahedron"}).out);
    CHECK(o["gamma"] == 2);
    CHECK(json::parse(invoke({"oracle", "--search-reduction", "--name", "octahedron"}).out)["step"].is_null());
    CHECK(json::parse(invoke({"oracle", "--verify", "0,3", "--name", "fig2a"}).out)["dominates"] == true);
    auto s = json::parse(invoke({"stats", "--name", "fig2a"}).out);
    CHECK(s["n"] == 6);
    CHECK(s["wnt"] == true);
    CHECK(s["reducible"] == false);
}

TEST_CASE("gen round trip and dot") {
    auto r = invoke({"gen", "--family", "flipwalk", "--n", "40", "--seed", "3"});
    CHECK(r.code == 0);
    PlaneGraph g = from_json(r.out);
    CHECK(g == generate({Family::FlipWalk, 40, 3}));
    auto d = invoke({"gen", "--family", "wheel", "--n", "4", "--dot"});
    CHECK(d.out.rfind("graph G {", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"dominate", "--name", "fig2a"}).code == 1);
    CHECK(invoke({"verify", "--set", "0,x", "--name", "fig2a"}).code == 1);
    CHECK(invoke({"stats"}).code == 1);
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"gen", "--name", "nosuch"}).code == 1);
    auto dir = scratch_dir();
    write(dir / "bad.json", "{\"vertices\":[1]");
    auto bad = invoke({"stats", "--input", (dir / "bad.json").string()});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.err)["error"] == "FormatError");
    CHECK(is_defect(ErrorCode::LemmaViolation));
    CHECK(is_defect(ErrorCode::BoundViolation));
    CHECK(is_defect(ErrorCode::ColoringFailed));
    CHECK_FALSE(is_defect(ErrorCode::NotTriangulation));
}

TEST_CASE("batch directory") {
    auto dir = scratch_dir();
    write(dir / "a.json", to_json(generate({Family::Stacked, 20, 1})));
    write(dir / "b.json", to_json(fixture("fig2a")));
    write(dir / "notes.txt", "ignored");
    auto r = invoke({"dominate", "--dir", dir.string()});
    CHECK(r.code == 1);
    std::istringstream lines(r.out);
    std::string first, second, extra;
    std::getline(lines, first);
    std::getline(lines, second);
    CHECK_FALSE(std::getline(lines, extra));
    CHECK(json::parse(first)["file"] == "a.json");
    CHECK(json::parse(first).contains("report"));
    CHECK(json::parse(second)["error"]["error"] == "NotTriangulation");
}

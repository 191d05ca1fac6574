#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "graphmax/json_io.hpp"

using namespace graphmax;

namespace {

struct Run {
    int status;
    std::string out;
};

// stderr is discarded; only stdout is captured.
Run run(const std::string& args) {
    const std::string command = std::string(GRAPHMAX_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("graphmax_cli_" + name);
}

}  // namespace

TEST_CASE("gen round-trips through the loader") {
    for (const char* family : {"complete", "star", "path", "cycle"}) {
        const Run r = run(std::string("gen --family ") + family + " --n 6");
        REQUIRE(r.status == 0);
        const Graph g = graph_from_json(Json::parse(r.out));
        CHECK(g.size() == 6);
        CHECK(dump(to_json(g)) == r.out);
    }
    CHECK(graph_from_json(Json::parse(run("gen --family star --n 5").out)) == star(5));
}

TEST_CASE("maxop, var and norm") {
    const auto graph = scratch("g.json");
    const auto fn = scratch("f.json");
    write_text_file(graph, dump(to_json(star(4))));
    write_text_file(fn, R"({"values": [2, 1, 1, 1]})");
    const std::string io = "--graph " + graph.string() + " --fn " + fn.string();

    Run r = run("maxop " + io);
    REQUIRE(r.status == 0);
    CHECK(vertex_function_from_json(Json::parse(r.out)) == VertexFunction({2.0, 1.5, 1.5, 1.5}));

    r = run("maxop " + io + " --uncentered");
    REQUIRE(r.status == 0);
    CHECK(vertex_function_from_json(Json::parse(r.out)) == VertexFunction({2.0, 1.5, 1.5, 1.5}));

    r = run("var " + io + " --p 1");
    REQUIRE(r.status == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["variation"] == 3.0);
    CHECK(doc["maximal_variation"] == 1.5);
    CHECK(doc["ratio"] == 0.5);

    r = run("norm " + io + " --p inf");
    REQUIRE(r.status == 0);
    doc = Json::parse(r.out);
    CHECK(doc["p"] == "inf");
    CHECK(doc["norm"] == 2.0);

    const auto out = scratch("out.json");
    CHECK(run("maxop " + io + " --out " + out.string()).status == 0);
    CHECK(vertex_function_from_json(read_json_file(out)) == VertexFunction({2.0, 1.5, 1.5, 1.5}));

    write_text_file(fn, R"({"values": [2, 1]})");
    CHECK(run("maxop " + io).status == 2);
    write_text_file(fn, "not json");
    CHECK(run("maxop " + io).status == 2);
    CHECK(run("maxop --graph " + graph.string() + " --fn /nonexistent/f.json").status == 2);
    CHECK(run("maxop " + io + " --alpha 1.5").status == 2);

    for (const auto& p : {graph, fn, out}) std::filesystem::remove(p);
}

TEST_CASE("constant lookups") {
    Run r = run("constant --family complete --n 5 --p 2");
    REQUIRE(r.status == 0);
    Json doc = Json::parse(r.out);
    CHECK(doc["value"] == 0.8);
    CHECK(doc["status"] == "proved");

    r = run("constant --family star --n 4 --p 2");
    REQUIRE(r.status == 0);
    doc = Json::parse(r.out);
    CHECK(doc["value"].is_null());
    CHECK(doc["status"] == "unknown");

    r = run("constant --family star --n 4 --target l2");
    REQUIRE(r.status == 0);
    CHECK(Json::parse(r.out)["value"] == round_significant(std::sqrt(1.0 + std::sqrt(48.0) / 8.0)));

    CHECK(run("constant --family wheel --n 4").status == 2);
    CHECK(run("constant --family star --n 4 --p -1").status == 2);
    CHECK(run("constant --family star --n 1 --p 2").status == 2);
}

TEST_CASE("search") {
    Run r = run("search --family complete --n 4 --p 2 --restarts 8 --seed 3");
    REQUIRE(r.status == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["best_ratio"].get<double>() <= 0.75 + 1e-9);
    CHECK(doc["best_ratio"].get<double>() >= 0.75 - 1e-6);
    CHECK(doc["config"]["seed"] == 3);
    CHECK(doc["per_restart_best"].size() == 8);
    CHECK(doc["closed_form"]["constant"]["status"] == "proved");
    CHECK(run("search --family complete --n 4 --p 2 --restarts 8 --seed 3").out == r.out);

    r = run("search --family star --n 5 --target l2 --two-level");
    REQUIRE(r.status == 0);
    CHECK(Json::parse(r.out)["two_level"]["includes_center"] == true);

    r = run("search --scan --family star --n-range 4:5 --p-grid 0.75 --restarts 4");
    REQUIRE(r.status == 0);
    CHECK(Json::parse(r.out)["scan"].size() == 2);

    CHECK(run("search --p 2").status == 2);
    CHECK(run("search --family star --n 4 --target energy").status == 2);
    CHECK(run("search --family complete --n 4 --restarts 0").status == 2);
}

TEST_CASE("verify exit codes and formats") {
    Run r = run("verify --suite constants");
    CHECK(r.status == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["summary"]["passed"] == true);
    CHECK(doc["metadata"]["timestamp"].is_null());

    r = run("verify --suite extremizers --format csv");
    CHECK(r.status == 0);
    CHECK(r.out.starts_with("name,family,n,p,expected,computed,tolerance,status\n"));

    CHECK(run("verify --suite constants --timestamp").out.find("\"timestamp\": \"20") !=
          std::string::npos);
    CHECK(run("verify --suite everything").status == 2);
    CHECK(run("verify --format xml").status == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("gen --family star").status == 2);
    CHECK(run("gen --family wheel --n 4").status == 2);
    CHECK(run("--help").status == 0);
    CHECK(run("--version").out.find(GRAPHMAX_VERSION) != std::string::npos);
}

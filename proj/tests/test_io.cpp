#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "circsep/io.hpp"
#include "circsep/separation.hpp"
#include "support.hpp"

using namespace circsep;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "circsep_cli_tests";
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
    const char* cli = std::getenv("CIRCSEP_CLI");
    REQUIRE(cli != nullptr);
    fs::path dir = scratch_dir();
    std::string cmd = std::string("\"") + cli + "\" " + args + " > " +
                      (dir / "stdout.txt").string() + " 2> " + (dir / "stderr.txt").string();
    int rc = std::system(cmd.c_str());
    if (out) *out = slurp(dir / "stdout.txt");
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

bool have_cli() { return std::getenv("CIRCSEP_CLI") != nullptr; }

const char* k4_text = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const char* k4_emb_text =
    "orientation: ccw\n"
    "layer2: 0 1 2\n"
    "walk: 3\n"
    "rot 0: 1 3 2\n"
    "rot 1: 2 3 0\n"
    "rot 2: 0 3 1\n"
    "rot 3: 2 0 1\n";

} // namespace

TEST_CASE("graph files round trip") {
    std::istringstream in(k4_text);
    auto gf = parse_graph(in, false);
    CHECK(gf.g.vertex_count() == 4);
    CHECK(gf.g.edges() == k4_graph().edges());
    CHECK(emit_graph(gf.g, gf.labels) == k4_text);
}

TEST_CASE("graph parsing skips comments and blank lines") {
    std::istringstream in("# complete graph\n\n3 2\n0 1\n # chord\n1 2\n");
    auto gf = parse_graph(in, false);
    CHECK(gf.g.edge_count() == 2);
    CHECK(gf.g.has_edge(0, 1));
    CHECK(gf.g.has_edge(1, 2));
}

TEST_CASE("string labels intern in first-appearance order") {
    std::istringstream in("3 3\nraw mid\nmid top\ntop raw\n");
    auto gf = parse_graph(in, true);
    CHECK(gf.labels.names == std::vector<std::string>{"raw", "mid", "top"});
    CHECK(gf.labels.lookup("top") == 2);
    CHECK(gf.labels.name(0) == "raw");
    CHECK(gf.g.has_edge(0, 1));
    CHECK_THROWS_AS(gf.labels.lookup("absent"), input_error);
    // numeric mode refuses arbitrary tokens
    std::istringstream in2("3 1\nraw mid\n");
    CHECK_THROWS_AS(parse_graph(in2, false), input_error);
}

TEST_CASE("malformed graph files are rejected") {
    for (const char* text : {"",
                             "nonsense header\n",
                             "2 2\n0 1\n",
                             "2 1\n0 1\n1 0\n",
                             "3 1\n0 5\n",
                             "3 1\n0 1 2\n",
                             "2 1\n0 0\n"}) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_graph(in, false), input_error);
    }
}

TEST_CASE("embedding files round trip") {
    std::istringstream in(k4_emb_text);
    auto ef = parse_embedding(in, false);
    validate_embedding(ef.emb);
    CHECK(ef.emb.outer_cycle == std::vector<Vertex>{0, 1, 2});
    CHECK(ef.emb.inner_walks == std::vector<std::vector<Vertex>>{{3}});
    CHECK(ef.emb.rotation == k4_embedding().rotation);
    CHECK(emit_embedding(ef.emb, ef.labels) == k4_emb_text);
}

TEST_CASE("clockwise input is mirrored on load") {
    std::istringstream in(
        "orientation: cw\n"
        "layer2: 0 2 1\n"
        "walk: 3\n"
        "rot 0: 2 3 1\n"
        "rot 1: 0 3 2\n"
        "rot 2: 1 3 0\n"
        "rot 3: 1 0 2\n");
    auto ef = parse_embedding(in, false);
    validate_embedding(ef.emb);
    CHECK(CircularOrder(ef.emb.outer_cycle) == CircularOrder({0, 1, 2}));
    CHECK(ef.emb.rotation == k4_embedding().rotation);
}

TEST_CASE("family files round trip") {
    SeparationFamily fam{CircularOrder({0, 3, 1, 2}), CircularOrder({3, 0, 1, 2})};
    auto labels = numeric_labels(4);
    std::string text = emit_family(fam, labels);
    CHECK(text == "0 3 1 2\n3 0 1 2\n");
    std::istringstream in(text);
    auto back = parse_family(in, labels);
    REQUIRE(back.size() == 2);
    CHECK(back[0] == fam[0]);
    CHECK(back[1] == fam[1]);

    std::istringstream dup("0 1 1 2\n");
    CHECK_THROWS_AS(parse_family(dup, labels), input_error);
    std::istringstream unknown("0 1 2 7\n");
    CHECK_THROWS_AS(parse_family(unknown, labels), input_error);
}

TEST_CASE("cli verifies families and reports by exit code") {
    if (!have_cli()) {
        MESSAGE("CIRCSEP_CLI not set");
        return;
    }
    fs::path dir = scratch_dir();
    std::ofstream(dir / "k4.graph") << k4_text;
    std::ofstream(dir / "k4.family") << "0 3 1 2\n3 0 1 2\n";
    std::ofstream(dir / "bad.family") << "0 1 2 3\n";
    CHECK(run_cli("verify " + (dir / "k4.graph").string() + " " + (dir / "k4.family").string()) == 0);
    CHECK(run_cli("verify " + (dir / "k4.graph").string() + " " + (dir / "bad.family").string()) == 1);
    CHECK(run_cli("verify " + (dir / "missing.graph").string() + " " + (dir / "k4.family").string()) == 2);
    CHECK(run_cli("verify") == 2);

    std::string out;
    run_cli("--json verify " + (dir / "k4.graph").string() + " " + (dir / "k4.family").string(), &out);
    CHECK(out.find("\"ok\":true") != std::string::npos);
    CHECK(out.find("\"k\":2") != std::string::npos);
    // the global flag also binds after the subcommand
    std::string out2;
    CHECK(run_cli("verify --json " + (dir / "k4.graph").string() + " " +
                  (dir / "k4.family").string(), &out2) == 0);
    CHECK(out2.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("cli constructs from embeddings and series-parallel graphs") {
    if (!have_cli()) {
        MESSAGE("CIRCSEP_CLI not set");
        return;
    }
    fs::path dir = scratch_dir();
    std::ofstream(dir / "k4.graph") << k4_text;
    std::ofstream(dir / "k4.emb") << k4_emb_text;
    std::ofstream(dir / "k23.graph") << "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n";
    CHECK(run_cli("construct " + (dir / "k4.emb").string() + " --out " +
                  (dir / "built.family").string()) == 0);
    CHECK(run_cli("verify " + (dir / "k4.graph").string() + " " +
                  (dir / "built.family").string()) == 0);
    CHECK(run_cli("construct --sp " + (dir / "k23.graph").string()) == 0);
    // an embedding and --sp together make no sense
    CHECK(run_cli("construct " + (dir / "k4.emb").string() + " --sp " +
                  (dir / "k23.graph").string()) == 2);
    // series-parallel route rejects graphs outside the class
    CHECK(run_cli("construct --sp " + (dir / "k4.graph").string()) == 2);
}

TEST_CASE("cli exact reports the minimum size") {
    if (!have_cli()) {
        MESSAGE("CIRCSEP_CLI not set");
        return;
    }
    fs::path dir = scratch_dir();
    std::ofstream(dir / "k4.graph") << k4_text;
    std::string out;
    CHECK(run_cli("--json exact " + (dir / "k4.graph").string(), &out) == 0);
    CHECK(out.find("\"k\":2") != std::string::npos);
    CHECK(out.find("\"vacuous\":false") != std::string::npos);
    // over the size cap
    std::ofstream big(dir / "big.graph");
    big << "10 1\n0 9\n";
    big.close();
    CHECK(run_cli("exact " + (dir / "big.graph").string()) == 2);
}

TEST_CASE("cli generation is reproducible") {
    if (!have_cli()) {
        MESSAGE("CIRCSEP_CLI not set");
        return;
    }
    fs::path dir = scratch_dir();
    CHECK(run_cli("gen --kind two-outerplanar --n 12 --seed 5 --out " +
                  (dir / "g1").string()) == 0);
    CHECK(run_cli("gen --kind two-outerplanar --n 12 --seed 5 --out " +
                  (dir / "g2").string()) == 0);
    CHECK(slurp(dir / "g1.graph") == slurp(dir / "g2.graph"));
    CHECK(slurp(dir / "g1.emb") == slurp(dir / "g2.emb"));
    CHECK(!slurp(dir / "g1.emb").empty());
    // generated embedding feeds back into construct
    CHECK(run_cli("construct " + (dir / "g1.emb").string() + " --out " +
                  (dir / "g1.family").string()) == 0);
    CHECK(run_cli("verify " + (dir / "g1.graph").string() + " " +
                  (dir / "g1.family").string()) == 0);
    CHECK(run_cli("gen --kind nonsense --n 5 --seed 1") == 2);
}

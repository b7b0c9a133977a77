#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "circsep/construct.hpp"
#include "circsep/errors.hpp"
#include "circsep/exact.hpp"
#include "circsep/generate.hpp"
#include "circsep/io.hpp"
#include "circsep/series_parallel.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace circsep;

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long millis() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

GraphFile load_graph(const std::string& path, bool labels) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_graph(in, labels);
}

EmbeddingFile load_embedding(const std::string& path, bool labels) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_embedding(in, labels);
}

SeparationFamily load_family(const std::string& path, const LabelMap& labels) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    return parse_family(in, labels);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << content;
}

json violations_json(const std::vector<Violation>& vs, const LabelMap& labels) {
    json arr = json::array();
    for (const auto& v : vs)
        arr.push_back({{labels.name(v.e.u), labels.name(v.e.v)},
                       {labels.name(v.f.u), labels.name(v.f.v)}});
    return arr;
}

void print_violations(const std::vector<Violation>& vs, const LabelMap& labels,
                      std::ostream& out) {
    for (const auto& v : vs)
        out << "violation: (" << labels.name(v.e.u) << "," << labels.name(v.e.v)
            << ") x (" << labels.name(v.f.u) << "," << labels.name(v.f.v) << ")\n";
}

int run_verify_one(const std::string& graph_path, const std::string& family_path,
                   bool use_labels, bool as_json, const std::string& tag) {
    Timer timer;
    GraphFile gf = load_graph(graph_path, use_labels);
    SeparationFamily fam = load_family(family_path, gf.labels);
    Verdict v = verify_family(gf.g, fam);
    if (as_json) {
        json r = {{"ok", v.ok},
                  {"k", static_cast<int>(fam.size())},
                  {"violations", violations_json(v.violations, gf.labels)},
                  {"millis", timer.millis()}};
        if (!tag.empty()) r["name"] = tag;
        std::cout << r.dump() << '\n';
    } else {
        std::string prefix = tag.empty() ? "" : tag + ": ";
        std::cout << prefix << (v.ok ? "ok" : "FAIL") << " k=" << fam.size()
                  << " violations=" << v.violations.size()
                  << " millis=" << timer.millis() << '\n';
        print_violations(v.violations, gf.labels, std::cout);
    }
    return v.ok ? 0 : 1;
}

int run_verify_all(const std::string& dir, bool use_labels, bool as_json) {
    std::vector<fs::path> graphs;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".graph")
            graphs.push_back(e.path());
    std::sort(graphs.begin(), graphs.end());
    if (graphs.empty()) throw input_error("no .graph files in '" + dir + "'");
    int worst = 0;
    for (const auto& gpath : graphs) {
        fs::path fpath = gpath;
        fpath.replace_extension(".family");
        if (!fs::exists(fpath))
            throw input_error("missing family file '" + fpath.string() + "'");
        int rc = run_verify_one(gpath.string(), fpath.string(), use_labels, as_json,
                                gpath.stem().string());
        worst = std::max(worst, rc);
    }
    return worst;
}

int run_construct(const std::string& emb_path, const std::string& sp_path,
                  const std::string& out_path, bool use_labels, bool as_json) {
    Timer timer;
    Graph g;
    LabelMap labels;
    SeparationFamily fam;
    if (!sp_path.empty()) {
        GraphFile gf = load_graph(sp_path, use_labels);
        g = gf.g;
        labels = gf.labels;
        fam = sp_construct(g);
    } else {
        EmbeddingFile ef = load_embedding(emb_path, use_labels);
        g = ef.emb.g;
        labels = ef.labels;
        fam = construct_two_outerplanar(ef.emb);
    }
    Verdict v = verify_family(g, fam);
    std::string family_text = emit_family(fam, labels);
    if (!out_path.empty()) write_file(out_path, family_text);
    if (as_json) {
        json fam_json = json::array();
        for (const auto& o : fam) {
            json line = json::array();
            for (Vertex x : o.seq()) line.push_back(labels.name(x));
            fam_json.push_back(line);
        }
        json r = {{"ok", v.ok},
                  {"k", static_cast<int>(fam.size())},
                  {"violations", violations_json(v.violations, labels)},
                  {"millis", timer.millis()},
                  {"family", fam_json}};
        std::cout << r.dump() << '\n';
    } else if (out_path.empty()) {
        std::cout << family_text;
        std::cerr << (v.ok ? "ok" : "FAIL") << " k=" << fam.size()
                  << " millis=" << timer.millis() << '\n';
        print_violations(v.violations, labels, std::cerr);
    } else {
        std::cout << (v.ok ? "ok" : "FAIL") << " k=" << fam.size()
                  << " violations=" << v.violations.size()
                  << " millis=" << timer.millis() << '\n';
        print_violations(v.violations, labels, std::cout);
    }
    return v.ok ? 0 : 1;
}

int run_exact(const std::string& graph_path, int kmax, int bound, bool use_labels,
              bool as_json) {
    Timer timer;
    GraphFile gf = load_graph(graph_path, use_labels);
    ExactOptions opt;
    opt.kmax = kmax;
    opt.bound = bound;
    ExactResult res = exact_pi_circ(gf.g, opt);
    if (as_json) {
        json r = {{"ok", res.determined},
                  {"k", res.k},
                  {"vacuous", res.vacuous},
                  {"violations", json::array()},
                  {"millis", timer.millis()}};
        std::cout << r.dump() << '\n';
    } else if (res.determined) {
        std::cout << "k=" << res.k << (res.vacuous ? " (vacuous)" : "")
                  << " millis=" << timer.millis() << '\n';
    } else {
        std::cout << "not determined: every family of size <= " << kmax
                  << " leaves some pair uncovered, millis=" << timer.millis() << '\n';
    }
    return 0;
}

int run_gen(const std::string& kind, int n, std::uint64_t seed,
            const std::string& out_prefix) {
    if (kind == "series-parallel") {
        Graph g = gen_series_parallel(n, seed);
        std::string text = emit_graph(g, numeric_labels(g.vertex_count()));
        if (out_prefix.empty()) std::cout << text;
        else write_file(out_prefix + ".graph", text);
        return 0;
    }
    TwoOuterEmbedding emb;
    if (kind == "outerplanar") emb = gen_outerplanar(n, seed);
    else if (kind == "two-outerplanar") emb = gen_two_outerplanar(n, seed);
    else throw input_error("unknown kind '" + kind + "'");
    LabelMap labels = numeric_labels(emb.g.vertex_count());
    if (out_prefix.empty()) {
        std::cout << emit_embedding(emb, labels);
    } else {
        write_file(out_prefix + ".graph", emit_graph(emb.g, labels));
        write_file(out_prefix + ".emb", emit_embedding(emb, labels));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular separation families for planar graph layers"};
    app.require_subcommand(1);

    bool use_labels = false, as_json = false;
    app.add_flag("--labels", use_labels, "treat file tokens as string labels");
    app.add_flag("--json", as_json, "machine-readable reports");

    auto* verify = app.add_subcommand("verify", "check a family against a graph");
    verify->fallthrough();
    std::string v_graph, v_family, v_all;
    verify->add_option("graph", v_graph, "graph file");
    verify->add_option("family", v_family, "family file");
    verify->add_option("--all", v_all, "verify every .graph/.family pair in a directory");

    auto* construct = app.add_subcommand("construct", "build a separating family");
    construct->fallthrough();
    std::string c_emb, c_sp, c_out;
    construct->add_option("embedding", c_emb, "embedding file");
    construct->add_option("--sp", c_sp, "series-parallel graph file");
    construct->add_option("--out", c_out, "write the family to this file");

    auto* exact = app.add_subcommand("exact", "exhaustive minimum family size");
    exact->fallthrough();
    std::string e_graph;
    int e_kmax = 3, e_bound = 9;
    exact->add_option("graph", e_graph, "graph file")->required();
    exact->add_option("--kmax", e_kmax, "largest family size to try");
    exact->add_option("--bound", e_bound, "largest vertex count accepted");

    auto* gen = app.add_subcommand("gen", "sample a random instance");
    gen->fallthrough();
    std::string g_kind, g_out;
    int g_n = 0;
    std::uint64_t g_seed = 0;
    gen->add_option("--kind", g_kind,
                    "outerplanar | two-outerplanar | series-parallel")->required();
    gen->add_option("--n", g_n, "vertex count")->required();
    gen->add_option("--seed", g_seed, "generator seed")->required();
    gen->add_option("--out", g_out, "file prefix for .graph/.emb output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (!v_all.empty()) {
                if (!v_graph.empty() || !v_family.empty())
                    throw input_error("--all replaces the positional files");
                return run_verify_all(v_all, use_labels, as_json);
            }
            if (v_graph.empty() || v_family.empty())
                throw input_error("verify needs a graph file and a family file");
            return run_verify_one(v_graph, v_family, use_labels, as_json, "");
        }
        if (construct->parsed()) {
            if (c_emb.empty() == c_sp.empty())
                throw input_error("construct needs an embedding file or --sp");
            return run_construct(c_emb, c_sp, c_out, use_labels, as_json);
        }
        if (exact->parsed())
            return run_exact(e_graph, e_kmax, e_bound, use_labels, as_json);
        if (gen->parsed())
            return run_gen(g_kind, g_n, g_seed, g_out);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const contract_error& e) {
        std::cerr << "contract error: " << e.what() << '\n';
        return 2;
    } catch (const capability_error& e) {
        std::cerr << "capability error: " << e.what() << '\n';
        return 2;
    } catch (const structural_error& e) {
        std::cerr << "structural error: " << e.what() << '\n';
        return 2;
    } catch (const not_series_parallel& e) {
        std::cerr << "not series-parallel: " << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

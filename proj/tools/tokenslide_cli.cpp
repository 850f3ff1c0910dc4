#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tokenslide/tokenslide.h"

namespace {

enum ExitCode { kOk = 0, kInputError = 2, kResourceCap = 3, kInternal = 4 };

int exit_code(ts_status s) {
    switch (s) {
        case TS_OK: return kOk;
        case TS_E_EXPLOSION_CAP:
        case TS_E_TOO_LARGE_FOR_ISO:
        case TS_E_N_TOO_LARGE: return kResourceCap;
        case TS_E_INTERNAL: return kInternal;
        default: return kInputError;
    }
}

/// Carries a library failure to main.
struct Failure {
    ts_status status;
    std::string message;
};

struct ContextDeleter {
    void operator()(ts_context* c) const { ts_context_free(c); }
};
struct GraphDeleter {
    void operator()(ts_graph* g) const { ts_graph_free(g); }
};
struct LabeledDeleter {
    void operator()(ts_labeled* g) const { ts_labeled_free(g); }
};
using Context = std::unique_ptr<ts_context, ContextDeleter>;
using GraphPtr = std::unique_ptr<ts_graph, GraphDeleter>;
using LabeledPtr = std::unique_ptr<ts_labeled, LabeledDeleter>;

ts_context* g_ctx = nullptr;

void check(ts_status s) {
    if (s != TS_OK) throw Failure{s, std::string(ts_status_name(s)) + ": " + ts_last_error(g_ctx)};
}

void input_error(const std::string& msg) { throw Failure{TS_E_INVALID_ARGUMENT, msg}; }

std::string take(char* s) {
    std::string out(s ? s : "");
    ts_string_free(s);
    return out;
}

std::string read_stream(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_file(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{TS_E_MALFORMED_INPUT, "cannot read " + path};
    return read_stream(in);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure{TS_E_INVALID_ARGUMENT, "cannot write " + path};
    out << text;
}

std::string first_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) return line;
    }
    throw Failure{TS_E_MALFORMED_GRAPH6, "no graph6 line on input"};
}

/// Graph input shared by several subcommands.
struct GraphInput {
    std::string graph6;
    std::string json;
    bool from_stdin = false;
    std::string family;
    std::size_t n = 0;
    std::size_t m = 0;

    void add_to(CLI::App* app) {
        auto* g = app->add_option("--graph6", graph6, "Input graph in graph6");
        auto* j = app->add_option("--json", json, "Input graph JSON file ('-' for stdin)");
        auto* s = app->add_flag("--stdin", from_stdin, "Read graph6 from stdin");
        auto* f = app->add_option("--family", family,
                                  "Generated input: path, cycle, complete, edgeless, star, complete_bipartite, "
                                  "complete_minus_edge, paw, diamond, claw, kite");
        app->add_option("--n", n, "Family parameter");
        app->add_option("--m", m, "Second family parameter");
        g->excludes(j, s, f);
        j->excludes(s, f);
        s->excludes(f);
    }

    GraphPtr load() const {
        ts_graph* out = nullptr;
        if (!graph6.empty())
            check(ts_graph_from_graph6(g_ctx, graph6.c_str(), &out));
        else if (!json.empty())
            check(ts_graph_from_json(g_ctx, read_file(json).c_str(), &out));
        else if (from_stdin)
            check(ts_graph_from_graph6(g_ctx, first_line(read_stream(std::cin)).c_str(), &out));
        else if (!family.empty())
            check(ts_graph_generate(g_ctx, family.c_str(), n, m, &out));
        else
            input_error("no input graph: use --graph6, --json, --stdin or --family");
        return GraphPtr(out);
    }
};

std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t pos = 0;
            auto v = std::stoul(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Failure{TS_E_MALFORMED_INPUT, "bad vertex index '" + item + "'"};
        }
    }
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        write_file(out_path, text.back() == '\n' ? text : text + "\n");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Token sliding reconfiguration graphs"};
    app.require_subcommand(1);
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_option("--threads", threads, "Worker threads (output does not depend on this)")->check(CLI::PositiveNumber);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph or enumerate a class");
    GraphInput gen_in;
    gen_in.add_to(gen);
    std::string gen_enum, gen_format = "graph6", gen_out;
    std::size_t gen_isolated = 0;
    bool gen_complement = false;
    gen->add_option("--enumerate", gen_enum, "Enumerate trees|graphs|connected on --n vertices");
    gen->add_flag("--complement", gen_complement, "Complement the graph");
    gen->add_option("--isolated", gen_isolated, "Add isolated vertices");
    gen->add_option("--format", gen_format, "graph6|json|dot")->check(CLI::IsMember({"graph6", "json", "dot"}));
    gen->add_option("--out", gen_out, "Output file");

    // build
    auto* build = app.add_subcommand("build", "Build TS_k, TS, L_k or F_k");
    GraphInput build_in;
    build_in.add_to(build);
    std::size_t build_k = 0;
    bool build_all = false;
    std::string build_kind = "ts", build_out;
    auto* k_opt = build->add_option("--k", build_k, "Token count");
    auto* all_opt = build->add_flag("--all", build_all, "Build TS over all k");
    k_opt->excludes(all_opt);
    build->add_option("--kind", build_kind, "ts|lk|fk")->check(CLI::IsMember({"ts", "lk", "fk"}));
    build->add_option("--out", build_out, "Write <out>.json and <out>.dot instead of JSON on stdout");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Property report of a graph or of its TS_k");
    GraphInput analyze_in;
    analyze_in.add_to(analyze);
    std::size_t analyze_ts = 0;
    bool analyze_ts_all = false;
    auto* ts_opt = analyze->add_option("--ts", analyze_ts, "Analyze TS_k of the input");
    analyze->add_flag("--ts-all", analyze_ts_all, "Analyze TS of the input")->excludes(ts_opt);

    // realize
    auto* realize = app.add_subcommand("realize", "Find a base graph whose TS_k is the target");
    GraphInput realize_in;
    realize_in.add_to(realize);
    std::string realize_target, realize_format = "json";
    std::size_t realize_k = 2, realize_max_n = 6;
    bool realize_split = false, realize_search = false;
    realize->add_option("--target", realize_target, "Constructor family: complete|path|cycle|star (uses --n)");
    realize->add_option("--k", realize_k, "Token count");
    realize->add_flag("--split", realize_split, "Split-graph construction for the input graph");
    realize->add_flag("--search", realize_search, "Bounded search for the input graph");
    realize->add_option("--max-n", realize_max_n, "Largest base order tried by --search");
    realize->add_option("--format", realize_format, "json|graph6")->check(CLI::IsMember({"json", "graph6"}));

    // decompose
    auto* decompose = app.add_subcommand("decompose", "Split TS_k of an H1,H2 join into parts");
    std::string dec_g1, dec_g2, dec_h1, dec_h2, dec_spec;
    std::size_t dec_k = 2;
    decompose->add_option("--g1", dec_g1, "G1 in graph6");
    decompose->add_option("--g2", dec_g2, "G2 in graph6");
    decompose->add_option("--h1", dec_h1, "H1 as comma-separated vertex indices of G1");
    decompose->add_option("--h2", dec_h2, "H2 as comma-separated vertex indices of G2");
    decompose->add_option("--k", dec_k, "Token count");
    decompose->add_option("--spec", dec_spec, "JSON file {g1, g2, h1, h2, k} with graph6 strings ('-' for stdin)");

    // geom
    auto* geom = app.add_subcommand("geom", "Triangulations of a planar point set");
    std::string geom_points;
    bool geom_stdin = false, geom_flip = false, geom_delaunay = false, geom_iso = false;
    geom->add_option("--points", geom_points, "JSON file of [x, y] pairs ('-' for stdin)");
    geom->add_flag("--stdin", geom_stdin, "Read the point JSON from stdin");
    geom->add_flag("--flip-graph", geom_flip, "Include the flip graph");
    geom->add_flag("--delaunay", geom_delaunay, "Include the Delaunay triangulation and Lawson distances");
    geom->add_flag("--check-ts-iso", geom_iso, "Compare the flip graph with TS of the intersection graph");

    // search
    auto* search = app.add_subcommand("search", "Run a named computer search");
    std::string search_name;
    bool search_timing = false;
    search->add_option("name", search_name, "trees7|trees8|planar6|cycles-planarity")->required();
    search->add_flag("--timing", search_timing, "Include wall time");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    Context ctx(ts_context_new());
    if (!ctx) {
        std::cerr << "error: cannot allocate context\n";
        return kInternal;
    }
    g_ctx = ctx.get();
    ts_context_set_threads(g_ctx, threads);
    if (const char* budget = std::getenv("TOKENSLIDE_NODE_BUDGET")) {
        char* end = nullptr;
        auto v = std::strtoull(budget, &end, 10);
        if (end == budget || *end != '\0' || v == 0) {
            std::cerr << "error: TOKENSLIDE_NODE_BUDGET must be a positive integer\n";
            return kInputError;
        }
        ts_context_set_node_budget(g_ctx, static_cast<size_t>(v));
    }

    try {
        char* text = nullptr;
        if (*gen) {
            if (!gen_enum.empty()) {
                check(ts_enumerate(g_ctx, gen_enum.c_str(), gen_in.n, &text));
                emit(take(text), gen_out);
                return kOk;
            }
            auto g = gen_in.load();
            if (gen_complement) {
                ts_graph* c = nullptr;
                check(ts_graph_complement(g_ctx, g.get(), &c));
                g.reset(c);
            }
            if (gen_isolated) {
                ts_graph* c = nullptr;
                check(ts_graph_add_isolated(g_ctx, g.get(), gen_isolated, &c));
                g.reset(c);
            }
            if (gen_format == "graph6")
                check(ts_graph_to_graph6(g_ctx, g.get(), &text));
            else if (gen_format == "json")
                check(ts_graph_to_json(g_ctx, g.get(), &text));
            else
                check(ts_graph_to_dot(g_ctx, g.get(), &text));
            emit(take(text), gen_out);
        } else if (*build) {
            auto g = build_in.load();
            ts_kind kind = TS_KIND_TSK;
            if (build_all) {
                if (build_kind != "ts") input_error("--all applies to TS only");
                kind = TS_KIND_TS;
            } else {
                if (!*k_opt) input_error("give --k or --all");
                kind = build_kind == "lk" ? TS_KIND_LK : build_kind == "fk" ? TS_KIND_FK : TS_KIND_TSK;
            }
            ts_labeled* raw = nullptr;
            check(ts_build(g_ctx, g.get(), kind, build_k, &raw));
            LabeledPtr lg(raw);
            check(ts_labeled_to_json(g_ctx, lg.get(), &text));
            auto json = take(text);
            if (build_out.empty()) {
                emit(json, "");
            } else {
                check(ts_labeled_to_dot(g_ctx, lg.get(), &text));
                emit(json, build_out + ".json");
                emit(take(text), build_out + ".dot");
            }
        } else if (*analyze) {
            auto g = analyze_in.load();
            if (*ts_opt || analyze_ts_all) {
                ts_labeled* raw = nullptr;
                check(ts_build(g_ctx, g.get(), analyze_ts_all ? TS_KIND_TS : TS_KIND_TSK, analyze_ts, &raw));
                LabeledPtr lg(raw);
                check(ts_analyze_labeled(g_ctx, lg.get(), &text));
            } else {
                check(ts_analyze_graph(g_ctx, g.get(), &text));
            }
            emit(take(text), "");
        } else if (*realize) {
            std::string json;
            if (!realize_target.empty()) {
                if (realize_split || realize_search) input_error("--target excludes --split and --search");
                check(ts_realize(g_ctx, realize_target.c_str(), realize_in.n, realize_k, &text));
                json = take(text);
            } else if (realize_split || realize_search) {
                if (realize_split && realize_search) input_error("--split and --search are exclusive");
                auto g = realize_in.load();
                if (realize_split)
                    check(ts_realize_split(g_ctx, g.get(), realize_k, &text));
                else
                    check(ts_search_realizer(g_ctx, g.get(), realize_k, realize_max_n, &text));
                json = take(text);
            } else {
                input_error("give --target, --split or --search");
            }
            auto j = nlohmann::json::parse(json);
            if (j.contains("realization")) j = j["realization"];
            if (realize_format == "json") {
                emit(json, "");
            } else if (j.contains("base_graph6")) {
                emit(j["base_graph6"].get<std::string>(), "");
            } else {
                std::cerr << "no realizer with at most " << j["none_up_to"] << " vertices\n";
                emit(json, "");
            }
        } else if (*decompose) {
            std::string g1 = dec_g1, g2 = dec_g2, h1 = dec_h1, h2 = dec_h2;
            std::size_t k = dec_k;
            if (!dec_spec.empty()) {
                try {
                    auto j = nlohmann::json::parse(read_file(dec_spec));
                    auto indices = [](const nlohmann::json& a) {
                        std::string out;
                        for (const auto& v : a) out += std::to_string(v.get<std::size_t>()) + ",";
                        return out;
                    };
                    g1 = j.at("g1").get<std::string>();
                    g2 = j.at("g2").get<std::string>();
                    h1 = indices(j.at("h1"));
                    h2 = indices(j.at("h2"));
                    k = j.at("k").get<std::size_t>();
                } catch (const nlohmann::json::exception& e) {
                    throw Failure{TS_E_MALFORMED_INPUT, std::string("decomposition spec: ") + e.what()};
                }
            }
            if (g1.empty() || g2.empty()) input_error("decompose needs --g1 and --g2");
            ts_graph *a = nullptr, *b = nullptr;
            check(ts_graph_from_graph6(g_ctx, g1.c_str(), &a));
            GraphPtr ga(a);
            check(ts_graph_from_graph6(g_ctx, g2.c_str(), &b));
            GraphPtr gb(b);
            auto i1 = parse_indices(h1), i2 = parse_indices(h2);
            check(ts_decompose_join(g_ctx, ga.get(), i1.data(), i1.size(), gb.get(), i2.data(), i2.size(), k, &text));
            emit(take(text), "");
        } else if (*geom) {
            std::string points;
            if (geom_stdin)
                points = read_stream(std::cin);
            else if (!geom_points.empty())
                points = read_file(geom_points);
            else
                input_error("give --points or --stdin");
            unsigned flags = 0;
            if (geom_flip) flags |= TS_GEOM_FLIP_GRAPH;
            if (geom_delaunay) flags |= TS_GEOM_DELAUNAY;
            if (geom_iso) flags |= TS_GEOM_CHECK_TS_ISO;
            check(ts_geometry(g_ctx, points.c_str(), flags, &text));
            emit(take(text), "");
        } else if (*search) {
            check(ts_run_search(g_ctx, search_name.c_str(), search_timing ? 1 : 0, &text));
            emit(take(text), "");
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return exit_code(f.status);
    }
    return kOk;
}

#include "tokenslide/tokenslide.h"

#include <cstring>
#include <new>
#include <string>
#include <string_view>

#include "canonical.hpp"
#include "decompose.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "geometry.hpp"
#include "graph_io.hpp"
#include "props.hpp"
#include "realize.hpp"
#include "reconf.hpp"
#include "searches.hpp"

using namespace tokenslide;

struct ts_context {
    std::string last_error;
    std::size_t node_budget = kDefaultNodeBudget;
    unsigned threads = 1;
};

struct ts_graph {
    Graph g;
};

struct ts_labeled {
    LabeledGraph lg;
};

namespace {

ts_status to_status(ErrorCode code) { return static_cast<ts_status>(static_cast<int>(code)); }

/// Runs body, mapping exceptions to a status and the context's last error.
template <class F>
ts_status guarded(ts_context* ctx, F&& body) {
    if (!ctx) return TS_E_INVALID_ARGUMENT;
    ctx->last_error.clear();
    try {
        body();
        return TS_OK;
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return TS_E_EXPLOSION_CAP;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return TS_E_INTERNAL;
    } catch (...) {
        ctx->last_error = "unknown exception";
        return TS_E_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
    auto* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

nlohmann::json parse_json(const char* text) {
    require(text, "json");
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::MalformedInput, std::string("JSON: ") + e.what());
    }
}

VertexSet to_set(const Graph& g, const std::size_t* idx, std::size_t len, const char* what) {
    if (len) require(idx, what);
    VertexSet s;
    for (std::size_t i = 0; i < len; ++i) {
        if (idx[i] >= g.order())
            fail(ErrorCode::IndexOutOfRange, std::string(what) + " vertex " + std::to_string(idx[i]) + " out of range");
        s.insert(idx[i]);
    }
    return s;
}

Graph generate(std::string_view family, std::size_t a, std::size_t b) {
    if (family == "path") return path(a);
    if (family == "cycle") return cycle(a);
    if (family == "complete") return complete(a);
    if (family == "edgeless") return edgeless(a);
    if (family == "star") return star(a);
    if (family == "complete_bipartite") return complete_bipartite(a, b);
    if (family == "complete_minus_edge") return complete_minus_edge(a);
    if (family == "paw") return paw();
    if (family == "diamond") return diamond();
    if (family == "claw") return claw();
    if (family == "kite") return kite();
    fail(ErrorCode::InvalidArgument, "unknown graph family " + std::string(family));
}

nlohmann::json edges_json(const std::vector<Edge>& edges) {
    auto j = nlohmann::json::array();
    for (auto [u, v] : edges) j.push_back({u, v});
    return j;
}

nlohmann::json geometry_report(const PointSet& p, unsigned flags) {
    nlohmann::json j;
    j["points"] = points_to_json(p);
    auto gp = check_general_position(p);
    j["general_position"] = {{"ok", gp.ok}, {"witness", gp.witness}, {"message", gp.message}};
    if (!gp.ok) fail(ErrorCode::GeneralPositionViolated, gp.message);

    auto sg = edge_intersection_graph(p);
    j["segments"] = edges_json(sg.segments);
    j["fixed"] = edges_json(sg.fixed);
    j["intersection_graph"] = graph_to_json(sg.graph);

    auto ts = triangulations(p);
    j["triangulation_size"] = ts.empty() ? 0 : ts.front().segments.size();
    auto tj = nlohmann::json::array();
    for (const auto& t : ts) tj.push_back({{"segments", edges_json(t.segments)}, {"stable", t.stable.elements()}});
    j["triangulations"] = std::move(tj);

    if (flags & TS_GEOM_FLIP_GRAPH) {
        auto fg = flip_graph(p);
        j["flip_graph"] = labeled_to_json(fg);
        j["flip_graph_dot"] = export_dot(fg, "Flip");
    }
    if (flags & TS_GEOM_DELAUNAY) {
        auto del = delaunay(p);
        j["delaunay"] = edges_json(del);
        auto dist = nlohmann::json::array();
        for (const auto& t : ts) {
            auto run = lawson_flip(p, t.segments);
            if (run.result != del) fail(ErrorCode::Internal, "Lawson flipping did not reach the Delaunay triangulation");
            dist.push_back(run.flips);
        }
        j["lawson_distance"] = std::move(dist);
    }
    if (flags & TS_GEOM_CHECK_TS_ISO) {
        auto fg = flip_graph(p);
        auto tsk = build_TSk(sg.graph, fg.k.value_or(0));
        bool same = fg.labels == tsk.labels && fg.adj.edges() == tsk.adj.edges();
        j["ts_iso"] = {{"k", fg.k.value_or(0)}, {"identical", same}, {"isomorphic", same || is_isomorphic(fg.adj, tsk.adj)}};
    }
    return j;
}

}  // namespace

extern "C" {

const char* ts_status_name(ts_status status) {
    if (status == TS_OK) return "OK";
    if (status < TS_E_INDEX_OUT_OF_RANGE || status > TS_E_INTERNAL) return "Unknown";
    return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

ts_context* ts_context_new(void) { return new (std::nothrow) ts_context; }
void ts_context_free(ts_context* ctx) { delete ctx; }
const char* ts_last_error(const ts_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }
void ts_context_set_node_budget(ts_context* ctx, size_t budget) {
    if (ctx) ctx->node_budget = budget;
}
size_t ts_context_node_budget(const ts_context* ctx) { return ctx ? ctx->node_budget : 0; }
void ts_context_set_threads(ts_context* ctx, unsigned threads) {
    if (ctx) ctx->threads = threads ? threads : 1;
}

void ts_string_free(char* s) { delete[] s; }

ts_status ts_graph_new(ts_context* ctx, size_t n, const size_t* edges, size_t m, ts_graph** out) {
    return guarded(ctx, [&] {
        require(out, "out");
        if (m) require(edges, "edges");
        std::vector<Edge> es;
        for (size_t i = 0; i < m; ++i) es.emplace_back(edges[2 * i], edges[2 * i + 1]);
        *out = new ts_graph{Graph(n, es)};
    });
}

ts_status ts_graph_from_graph6(ts_context* ctx, const char* text, ts_graph** out) {
    return guarded(ctx, [&] {
        require(text, "text");
        require(out, "out");
        *out = new ts_graph{parse_graph6(text)};
    });
}

ts_status ts_graph_from_json(ts_context* ctx, const char* json, ts_graph** out) {
    return guarded(ctx, [&] {
        require(out, "out");
        *out = new ts_graph{graph_from_json(parse_json(json))};
    });
}

ts_status ts_graph_generate(ts_context* ctx, const char* family, size_t a, size_t b, ts_graph** out) {
    return guarded(ctx, [&] {
        require(family, "family");
        require(out, "out");
        *out = new ts_graph{generate(family, a, b)};
    });
}

ts_status ts_graph_complement(ts_context* ctx, const ts_graph* g, ts_graph** out) {
    return guarded(ctx, [&] {
        require(g, "graph");
        require(out, "out");
        *out = new ts_graph{complement(g->g)};
    });
}

ts_status ts_graph_add_isolated(ts_context* ctx, const ts_graph* g, size_t t, ts_graph** out) {
    return guarded(ctx, [&] {
        require(g, "graph");
        require(out, "out");
        *out = new ts_graph{add_isolated(g->g, t)};
    });
}

void ts_graph_free(ts_graph* g) { delete g; }
size_t ts_graph_order(const ts_graph* g) { return g ? g->g.order() : 0; }
size_t ts_graph_size(const ts_graph* g) { return g ? g->g.size() : 0; }

ts_status ts_graph_to_graph6(ts_context* ctx, const ts_graph* g, char** out) {
    return guarded(ctx, [&] {
        require(g, "graph");
        require(out, "out");
        *out = dup_string(write_graph6(g->g));
    });
}

ts_status ts_graph_to_json(ts_context* ctx, const ts_graph* g, char** out) {
    return guarded(ctx, [&] {
        require(g, "graph");
        require(out, "out");
        *out = dup_string(graph_to_json(g->g).dump());
    });
}

ts_status ts_graph_to_dot(ts_context* ctx, const ts_graph* g, char** out) {
    return guarded(ctx, [&] {
        require(g, "graph");
        require(out, "out");
        *out = dup_string(export_dot(g->g));
    });
}

ts_status ts_enumerate(ts_context* ctx, const char* family, size_t n, char** out) {
    return guarded(ctx, [&] {
        require(family, "family");
        require(out, "out");
        std::string_view f = family;
        std::vector<Graph> gs;
        if (f == "trees")
            gs = enumerate_trees(n);
        else if (f == "graphs")
            gs = enumerate_graphs(n);
        else if (f == "connected")
            gs = enumerate_connected_graphs(n);
        else
            fail(ErrorCode::InvalidArgument, "unknown enumeration family " + std::string(f));
        std::string text;
        for (const auto& g : gs) text += write_graph6(g) + "\n";
        *out = dup_string(text);
    });
}

ts_status ts_build(ts_context* ctx, const ts_graph* g, ts_kind kind, size_t k, ts_labeled** out) {
    return guarded(ctx, [&] {
        require(g, "graph");
        require(out, "out");
        LabeledGraph lg;
        switch (kind) {
            case TS_KIND_TSK: lg = build_TSk(g->g, k, ctx->node_budget); break;
            case TS_KIND_TS: lg = build_TS(g->g, ctx->node_budget); break;
            case TS_KIND_LK: lg = build_Lk(g->g, k, ctx->node_budget); break;
            case TS_KIND_FK: lg = build_Fk(g->g, k, ctx->node_budget); break;
            default: fail(ErrorCode::InvalidArgument, "unknown graph kind");
        }
        *out = new ts_labeled{std::move(lg)};
    });
}

void ts_labeled_free(ts_labeled* lg) { delete lg; }
size_t ts_labeled_order(const ts_labeled* lg) { return lg ? lg->lg.order() : 0; }
size_t ts_labeled_size(const ts_labeled* lg) { return lg ? lg->lg.size() : 0; }

ts_status ts_labeled_to_json(ts_context* ctx, const ts_labeled* lg, char** out) {
    return guarded(ctx, [&] {
        require(lg, "labeled graph");
        require(out, "out");
        *out = dup_string(labeled_to_json(lg->lg).dump());
    });
}

ts_status ts_labeled_to_dot(ts_context* ctx, const ts_labeled* lg, char** out) {
    return guarded(ctx, [&] {
        require(lg, "labeled graph");
        require(out, "out");
        *out = dup_string(export_dot(lg->lg, kind_name(lg->lg.kind)));
    });
}

ts_status ts_analyze_graph(ts_context* ctx, const ts_graph* g, char** out) {
    return guarded(ctx, [&] {
        require(g, "graph");
        require(out, "out");
        *out = dup_string(report_to_json(analyze(g->g.to_adjacency())).dump());
    });
}

ts_status ts_analyze_labeled(ts_context* ctx, const ts_labeled* lg, char** out) {
    return guarded(ctx, [&] {
        require(lg, "labeled graph");
        require(out, "out");
        *out = dup_string(report_to_json(analyze(lg->lg.adj)).dump());
    });
}

ts_status ts_canonical_graph6(ts_context* ctx, const ts_graph* g, char** out) {
    return guarded(ctx, [&] {
        require(g, "graph");
        require(out, "out");
        *out = dup_string(write_graph6(canonical_graph(g->g)));
    });
}

ts_status ts_realize(ts_context* ctx, const char* family, size_t n, size_t k, char** out) {
    return guarded(ctx, [&] {
        require(family, "family");
        require(out, "out");
        std::string_view f = family;
        Realization r;
        if (f == "complete")
            r = realize_complete(n, k);
        else if (f == "path")
            r = realize_path(n, k);
        else if (f == "cycle")
            r = realize_cycle(n, k);
        else if (f == "star")
            r = realize_star(n, k);
        else
            fail(ErrorCode::InvalidArgument, "unknown realization family " + std::string(f));
        *out = dup_string(realization_to_json(r).dump());
    });
}

ts_status ts_realize_split(ts_context* ctx, const ts_graph* f, size_t k, char** out) {
    return guarded(ctx, [&] {
        require(f, "graph");
        require(out, "out");
        *out = dup_string(realization_to_json(realize_split(f->g, k)).dump());
    });
}

ts_status ts_search_realizer(ts_context* ctx, const ts_graph* target, size_t k, size_t max_n, char** out) {
    return guarded(ctx, [&] {
        require(target, "graph");
        require(out, "out");
        auto s = search_realizer(target->g, k, max_n, ctx->threads);
        nlohmann::json j;
        j["found"] = s.found.has_value();
        j["candidates_built"] = s.candidates_built;
        if (s.found)
            j["realization"] = realization_to_json(*s.found);
        else
            j["none_up_to"] = s.none_up_to;
        *out = dup_string(j.dump());
    });
}

ts_status ts_decompose_join(ts_context* ctx, const ts_graph* g1, const size_t* h1, size_t h1_len, const ts_graph* g2,
                            const size_t* h2, size_t h2_len, size_t k, char** out) {
    return guarded(ctx, [&] {
        require(g1, "g1");
        require(g2, "g2");
        require(out, "out");
        JoinSpec spec{g1->g, g2->g, to_set(g1->g, h1, h1_len, "h1"), to_set(g2->g, h2, h2_len, "h2"), k};
        auto j = decomposition_to_json(decompose_join(spec));
        j["disconnection_condition"] = {check_disconnection(spec, 1), check_disconnection(spec, 2)};
        *out = dup_string(j.dump());
    });
}

ts_status ts_geometry(ts_context* ctx, const char* points_json, unsigned flags, char** out) {
    return guarded(ctx, [&] {
        require(out, "out");
        *out = dup_string(geometry_report(points_from_json(parse_json(points_json)), flags).dump());
    });
}

ts_status ts_run_search(ts_context* ctx, const char* name, int timing, char** out) {
    return guarded(ctx, [&] {
        require(name, "name");
        require(out, "out");
        *out = dup_string(search_to_json(run_search(name, ctx->threads), timing != 0).dump());
    });
}

}  // extern "C"

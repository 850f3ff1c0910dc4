#include "reconf.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "graph_io.hpp"

namespace tokenslide {
namespace {

using Index = std::unordered_map<VertexSet, std::size_t, VertexSetHash>;

Index index_labels(const std::vector<VertexSet>& labels, std::size_t offset = 0) {
    Index idx;
    idx.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], offset + i);
    return idx;
}

/// Adds edge i-j for every swap I - u + v that moves(u, v, I) admits and
/// that lands on a known label with a larger index.
template <typename Moves>
void connect_swaps(const std::vector<VertexSet>& labels, std::size_t offset, const Index& idx, AdjacencyList& adj,
                   Moves&& moves) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto& I = labels[i];
        I.for_each([&](std::size_t u) {
            VertexSet rest = I;
            rest.erase(u);
            moves(u, rest, I).for_each([&](std::size_t v) {
                VertexSet J = rest;
                J.insert(v);
                auto it = idx.find(J);
                if (it != idx.end() && it->second > offset + i) adj.add_new_edge(offset + i, it->second);
            });
        });
    }
}

void connect_slides(const Graph& g, const std::vector<VertexSet>& labels, std::size_t offset, const Index& idx,
                    AdjacencyList& adj, const VertexSet& within) {
    connect_swaps(labels, offset, idx, adj, [&](std::size_t u, const VertexSet& rest, const VertexSet& I) {
        VertexSet targets = (g.neighbors(u) & within) - I;
        // J stays independent only if v has no neighbour left in I - u.
        VertexSet ok;
        targets.for_each([&](std::size_t v) {
            if (!g.neighbors(v).intersects(rest)) ok.insert(v);
        });
        return ok;
    });
}

}  // namespace

const char* kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::TSk: return "TSk";
        case GraphKind::TS: return "TS";
        case GraphKind::Lk: return "Lk";
        case GraphKind::Fk: return "Fk";
        case GraphKind::Flip: return "Flip";
        case GraphKind::Product: return "Product";
        case GraphKind::Abstract: return "Abstract";
    }
    return "Abstract";
}

std::optional<std::size_t> LabeledGraph::find(const VertexSet& label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
}

LabeledGraph build_TSk(const Graph& g, std::size_t k, std::size_t budget, std::optional<VertexSet> within) {
    if (k == 0) fail(ErrorCode::InvalidArgument, "TS_k needs k >= 1");
    LabeledGraph out;
    out.kind = GraphKind::TSk;
    out.base = g;
    out.k = k;
    const VertexSet universe = within.value_or(g.vertices());
    out.labels = independent_sets_of_size(g, k, budget, universe).members;
    out.adj = AdjacencyList(out.labels.size());
    connect_slides(g, out.labels, 0, index_labels(out.labels), out.adj, universe);
    out.adj.finalize();
    return out;
}

LabeledGraph build_TS(const Graph& g, std::size_t budget) {
    LabeledGraph out;
    out.kind = GraphKind::TS;
    out.base = g;
    out.layer_offsets.push_back(0);
    std::vector<std::vector<VertexSet>> layers;
    std::size_t total = 0;
    for (std::size_t s = 1;; ++s) {
        auto fam = independent_sets_of_size(g, s, budget - total);
        if (fam.members.empty()) break;
        total += fam.members.size();
        out.layer_offsets.push_back(total);
        layers.push_back(std::move(fam.members));
    }
    out.adj = AdjacencyList(total);
    for (std::size_t s = 0; s < layers.size(); ++s) {
        const auto off = out.layer_offsets[s];
        connect_slides(g, layers[s], off, index_labels(layers[s], off), out.adj, g.vertices());
        out.labels.insert(out.labels.end(), layers[s].begin(), layers[s].end());
    }
    out.adj.finalize();
    return out;
}

LabeledGraph ts_layer(const LabeledGraph& ts, std::size_t s) {
    if (ts.kind != GraphKind::TS) fail(ErrorCode::InvalidArgument, "ts_layer needs a TS graph");
    std::vector<std::size_t> nodes;
    if (s >= 1 && s < ts.layer_offsets.size())
        for (auto i = ts.layer_offsets[s - 1]; i < ts.layer_offsets[s]; ++i) nodes.push_back(i);
    auto out = induced_nodes(ts, nodes);
    out.kind = GraphKind::TSk;
    out.k = s;
    out.layer_offsets.clear();
    return out;
}

LabeledGraph build_Lk(const Graph& g, std::size_t k, std::size_t budget) {
    if (k == 0) fail(ErrorCode::InvalidArgument, "L_k needs k >= 1");
    LabeledGraph out;
    out.kind = GraphKind::Lk;
    out.base = g;
    out.k = k;
    out.labels = cliques_of_size(g, k, budget);
    out.adj = AdjacencyList(out.labels.size());
    const auto all = g.vertices();
    connect_swaps(out.labels, 0, index_labels(out.labels), out.adj,
                  [&](std::size_t, const VertexSet&, const VertexSet& I) { return all - I; });
    out.adj.finalize();
    return out;
}

LabeledGraph build_Fk(const Graph& g, std::size_t k, std::size_t budget) {
    if (k == 0 || k > g.order()) fail(ErrorCode::InvalidArgument, "F_k needs 1 <= k <= n");
    LabeledGraph out;
    out.kind = GraphKind::Fk;
    out.base = g;
    out.k = k;
    out.labels = independent_sets_of_size(edgeless(g.order()), k, budget).members;
    out.adj = AdjacencyList(out.labels.size());
    connect_swaps(out.labels, 0, index_labels(out.labels), out.adj,
                  [&](std::size_t u, const VertexSet&, const VertexSet& I) { return g.neighbors(u) - I; });
    out.adj.finalize();
    return out;
}

LabeledGraph induced_nodes(const LabeledGraph& lg, const std::vector<std::size_t>& nodes) {
    LabeledGraph out;
    out.kind = lg.kind;
    out.base = lg.base;
    out.k = lg.k;
    std::vector<std::size_t> pos(lg.order(), lg.order());
    for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = i;
    out.adj = AdjacencyList(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!lg.labels.empty()) out.labels.push_back(lg.labels[nodes[i]]);
        if (!lg.pair_labels.empty()) out.pair_labels.push_back(lg.pair_labels[nodes[i]]);
        for (auto w : lg.adj.neighbors(nodes[i]))
            if (pos[w] < lg.order() && pos[w] > i) out.adj.add_new_edge(i, pos[w]);
    }
    out.adj.finalize();
    return out;
}

nlohmann::json labeled_to_json(const LabeledGraph& lg) {
    nlohmann::json j;
    j["kind"] = kind_name(lg.kind);
    j["k"] = lg.k ? nlohmann::json(*lg.k) : nlohmann::json(nullptr);
    j["base"] = lg.base ? graph_to_json(*lg.base) : nlohmann::json(nullptr);
    auto nodes = nlohmann::json::array();
    for (const auto& l : lg.labels) nodes.push_back(l.elements());
    j["nodes"] = std::move(nodes);
    if (!lg.pair_labels.empty()) {
        auto pairs = nlohmann::json::array();
        for (const auto& [a, b] : lg.pair_labels) pairs.push_back({a.elements(), b.elements()});
        j["pairs"] = std::move(pairs);
    }
    auto edges = nlohmann::json::array();
    for (auto [u, v] : lg.adj.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!lg.layer_offsets.empty()) j["layer_offsets"] = lg.layer_offsets;
    return j;
}

std::string export_dot(const LabeledGraph& lg, std::string_view name) {
    const std::vector<std::string>* names = lg.base && !lg.base->names().empty() ? &lg.base->names() : nullptr;
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t i = 0; i < lg.order(); ++i) {
        os << "  " << i << " [label=\"";
        if (i < lg.labels.size())
            os << set_label(lg.labels[i], names);
        else
            os << i;
        os << "\"];\n";
    }
    for (auto [u, v] : lg.adj.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tokenslide

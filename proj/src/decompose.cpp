#include "decompose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "graph_io.hpp"

namespace tokenslide {
namespace {

void require_stable_k(const JoinSpec& spec) {
    if (count_independent_sets_of_size(spec.g1, spec.k) == 0)
        fail(ErrorCode::NoStableSetOfSizeK, "G1 has no stable set of size " + std::to_string(spec.k));
    if (count_independent_sets_of_size(spec.g2, spec.k) == 0)
        fail(ErrorCode::NoStableSetOfSizeK, "G2 has no stable set of size " + std::to_string(spec.k));
}

VertexSet label_union(const LabeledGraph& g) {
    VertexSet u;
    for (const auto& l : g.labels) u |= l;
    return u;
}

std::string ts_name(std::size_t s, const char* graph) { return "TS_" + std::to_string(s) + "(" + graph + ")"; }

std::vector<Edge> sorted_difference(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

nlohmann::json edges_json(const std::vector<Edge>& edges) {
    auto j = nlohmann::json::array();
    for (auto [u, v] : edges) j.push_back({u, v});
    return j;
}

}  // namespace

Graph join_graph(const JoinSpec& spec) { return join(spec.g1, spec.h1, spec.g2, spec.h2); }

LabeledGraph product(const LabeledGraph& a, const LabeledGraph& b, std::size_t offset) {
    const auto ub = label_union(b);
    if (!ub.empty() && ub.last() + offset >= kMaxVertices)
        fail(ErrorCode::NExceedsWidth, "product labels exceed the vertex-set width");
    if (label_union(a).intersects(ub.shifted(offset)))
        fail(ErrorCode::UniverseOverlap, "product factors share base vertices at offset " + std::to_string(offset));

    LabeledGraph out;
    out.kind = GraphKind::Product;
    if (a.k && b.k) out.k = *a.k + *b.k;
    const auto na = a.order(), nb = b.order();
    out.adj = AdjacencyList(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            auto right = b.labels[j].shifted(offset);
            out.labels.push_back(a.labels[i] | right);
            out.pair_labels.emplace_back(a.labels[i], right);
        }
    for (auto [i, i2] : a.adj.edges())
        for (std::size_t j = 0; j < nb; ++j) out.adj.add_new_edge(i * nb + j, i2 * nb + j);
    for (auto [j, j2] : b.adj.edges())
        for (std::size_t i = 0; i < na; ++i) out.adj.add_new_edge(i * nb + j, i * nb + j2);
    out.adj.finalize();
    return out;
}

Decomposition decompose_join(const JoinSpec& spec) {
    require_stable_k(spec);
    const auto k = spec.k;
    const auto off = spec.g1.order();
    Decomposition d;
    d.spec = spec;
    d.whole = build_TSk(join_graph(spec), k);

    std::unordered_map<VertexSet, std::size_t, VertexSetHash> where;
    for (std::size_t i = 0; i < d.whole.order(); ++i) where.emplace(d.whole.labels[i], i);
    auto locate = [&](const VertexSet& label) {
        auto it = where.find(label);
        if (it == where.end()) fail(ErrorCode::Internal, "decomposition node " + set_label(label) + " not in TS_k(G)");
        return it->second;
    };

    // Collects one factor graph's nodes and edges into the part.
    auto absorb = [&](std::map<std::size_t, int>& origin, std::set<Edge>& edges, const LabeledGraph& g, int tag) {
        std::vector<std::size_t> idx;
        for (const auto& l : g.labels) {
            idx.push_back(locate(l));
            origin[idx.back()] |= tag;
        }
        for (auto [u, v] : g.adj.edges()) edges.insert(std::minmax(idx[u], idx[v]));
    };

    const VertexSet v1 = spec.g1.vertices(), v2 = spec.g2.vertices();
    auto shifted = [&](LabeledGraph g) {
        for (auto& l : g.labels) l = l.shifted(off);
        return g;
    };
    std::vector<std::size_t> order{k, 0};
    for (std::size_t t = 1; t < k; ++t) order.push_back(t);
    for (auto s : order) {
        DecompositionPart part;
        part.s = s;
        std::map<std::size_t, int> origin;
        std::set<Edge> edges;
        if (s == k) {
            part.name = ts_name(k, "G1");
            absorb(origin, edges, build_TSk(spec.g1, k), 0);
        } else if (s == 0) {
            part.name = ts_name(k, "G2");
            absorb(origin, edges, shifted(build_TSk(spec.g2, k)), 0);
        } else {
            part.name = ts_name(s, "G1") + " x " + ts_name(k - s, "G2-H2") + " | " + ts_name(s, "G1-H1") + " x " +
                        ts_name(k - s, "G2");
            absorb(origin, edges,
                   product(build_TSk(spec.g1, s), build_TSk(spec.g2, k - s, kDefaultNodeBudget, v2 - spec.h2), off),
                   1);
            absorb(origin, edges,
                   product(build_TSk(spec.g1, s, kDefaultNodeBudget, v1 - spec.h1), build_TSk(spec.g2, k - s), off),
                   2);
        }
        for (auto [node, tag] : origin) {
            part.nodes.push_back(node);
            part.origin.push_back(tag);
        }
        part.product_edges.assign(edges.begin(), edges.end());
        d.parts.push_back(std::move(part));
    }

    std::vector<std::size_t> part_of(d.whole.order(), d.parts.size());
    for (std::size_t p = 0; p < d.parts.size(); ++p)
        for (auto node : d.parts[p].nodes) {
            if (part_of[node] != d.parts.size())
                fail(ErrorCode::Internal, "node " + set_label(d.whole.labels[node]) + " lies in two parts");
            part_of[node] = p;
        }
    for (std::size_t i = 0; i < d.whole.order(); ++i)
        if (part_of[i] == d.parts.size())
            fail(ErrorCode::Internal, "node " + set_label(d.whole.labels[i]) + " lies in no part");

    for (auto e : d.whole.adj.edges()) {
        if (part_of[e.first] == part_of[e.second])
            d.parts[part_of[e.first]].induced_edges.push_back(e);
        else
            d.cross_edges.push_back(e);
    }
    for (auto& part : d.parts) {
        part.extra_edges = sorted_difference(part.induced_edges, part.product_edges);
        part.missing_edges = sorted_difference(part.product_edges, part.induced_edges);
    }
    return d;
}

bool check_disconnection(const JoinSpec& spec, int side) {
    if (side != 1 && side != 2) fail(ErrorCode::InvalidArgument, "side must be 1 or 2");
    require_stable_k(spec);
    const auto& g = side == 1 ? spec.g1 : spec.g2;
    const auto& h = side == 1 ? spec.h1 : spec.h2;
    for (const auto& s : independent_sets_of_size(g, spec.k).members)
        if ((s & h).size() == 1) return false;
    return true;
}

bool part_is_detached(const Decomposition& d, int side) {
    if (side != 1 && side != 2) fail(ErrorCode::InvalidArgument, "side must be 1 or 2");
    const auto& nodes = d.parts[static_cast<std::size_t>(side - 1)].nodes;
    for (auto [u, v] : d.cross_edges)
        if (std::binary_search(nodes.begin(), nodes.end(), u) || std::binary_search(nodes.begin(), nodes.end(), v))
            return false;
    return true;
}

nlohmann::json decomposition_to_json(const Decomposition& d) {
    nlohmann::json j;
    j["k"] = d.spec.k;
    j["join"] = graph_to_json(join_graph(d.spec));
    j["h1"] = d.spec.h1.elements();
    j["h2"] = d.spec.h2.elements();
    j["whole"] = labeled_to_json(d.whole);
    auto parts = nlohmann::json::array();
    for (const auto& p : d.parts) {
        nlohmann::json pj;
        pj["s"] = p.s;
        pj["name"] = p.name;
        pj["nodes"] = p.nodes;
        auto labels = nlohmann::json::array();
        for (auto n : p.nodes) labels.push_back(d.whole.labels[n].elements());
        pj["labels"] = std::move(labels);
        pj["origin"] = p.origin;
        pj["product_edges"] = edges_json(p.product_edges);
        pj["induced_edges"] = edges_json(p.induced_edges);
        pj["extra_edges"] = edges_json(p.extra_edges);
        pj["missing_edges"] = edges_json(p.missing_edges);
        parts.push_back(std::move(pj));
    }
    j["parts"] = std::move(parts);
    j["cross_edges"] = edges_json(d.cross_edges);
    j["detached"] = {part_is_detached(d, 1), part_is_detached(d, 2)};
    return j;
}

}  // namespace tokenslide

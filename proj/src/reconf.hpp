#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "stable_sets.hpp"

namespace tokenslide {

enum class GraphKind { TSk, TS, Lk, Fk, Flip, Product, Abstract };

const char* kind_name(GraphKind kind);

/// A graph whose nodes are labelled by vertex sets of a base graph.
struct LabeledGraph {
    GraphKind kind = GraphKind::Abstract;
    std::optional<Graph> base;
    std::optional<std::size_t> k;
    std::vector<VertexSet> labels;
    /// Product nodes only: (left factor label, right factor label).
    std::vector<std::pair<VertexSet, VertexSet>> pair_labels;
    AdjacencyList adj;
    /// TS only: layer s (1-based) holds nodes [layer_offsets[s-1], layer_offsets[s]).
    std::vector<std::size_t> layer_offsets;

    std::size_t order() const { return adj.order(); }
    std::size_t size() const { return adj.size(); }

    /// Index of the node with this label, if any. Linear in order().
    std::optional<std::size_t> find(const VertexSet& label) const;
};

/// Nodes: size-k stable sets of g. I ~ J iff I - J = {u}, J - I = {v}, uv in E.
/// With within set, TS_k of the induced subgraph g[within], keeping g's labels.
LabeledGraph build_TSk(const Graph& g, std::size_t k, std::size_t budget = kDefaultNodeBudget,
                       std::optional<VertexSet> within = std::nullopt);

/// All non-empty stable sets, layered by size, no edges between layers.
LabeledGraph build_TS(const Graph& g, std::size_t budget = kDefaultNodeBudget);

/// Size-s layer of a TS graph as a TSk graph.
LabeledGraph ts_layer(const LabeledGraph& ts, std::size_t s);

/// Nodes: k-cliques of g, adjacent iff sharing k-1 vertices.
LabeledGraph build_Lk(const Graph& g, std::size_t k, std::size_t budget = kDefaultNodeBudget);

/// Token graph: all k-subsets of V(g) under the slide rule.
LabeledGraph build_Fk(const Graph& g, std::size_t k, std::size_t budget = kDefaultNodeBudget);

/// Subgraph induced on the given node indices (kept in the given order).
LabeledGraph induced_nodes(const LabeledGraph& lg, const std::vector<std::size_t>& nodes);

/// {"kind", "k", "base", "nodes", "edges"}; product nodes also carry "pairs".
nlohmann::json labeled_to_json(const LabeledGraph& lg);

/// Node labels like "135" (1-based members, base vertex names when set).
std::string export_dot(const LabeledGraph& lg, std::string_view name = "TS");

}  // namespace tokenslide

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "reconf.hpp"

namespace tokenslide {

/// H1,H2 join of g1 and g2 with token count k. In the joined graph g2's
/// vertices are shifted by |V(g1)|.
struct JoinSpec {
    Graph g1;
    Graph g2;
    VertexSet h1;
    VertexSet h2;
    std::size_t k = 2;
};

Graph join_graph(const JoinSpec& spec);

/// Nodes S1 + S2 (b's labels shifted by offset). Edges move inside one factor
/// while the other is fixed. Throws UniverseOverlap if shifted labels collide.
LabeledGraph product(const LabeledGraph& a, const LabeledGraph& b, std::size_t offset);

/// Nodes of TS_k(join) with s tokens in G1.
struct DecompositionPart {
    std::size_t s = 0;
    std::string name;
    /// Indices into Decomposition::whole, ascending.
    std::vector<std::size_t> nodes;
    /// For 0 < s < k: 1 if the node comes from TS_s(G1) x TS_{k-s}(G2-H2),
    /// 2 if from TS_s(G1-H1) x TS_{k-s}(G2), 3 if from both.
    std::vector<int> origin;
    /// Edges by the product rule, as pairs of whole-graph indices.
    std::vector<Edge> product_edges;
    /// Edges of TS_k(join) inside the part.
    std::vector<Edge> induced_edges;
    /// induced minus product.
    std::vector<Edge> extra_edges;
    /// product minus induced (never expected).
    std::vector<Edge> missing_edges;
};

struct Decomposition {
    JoinSpec spec;
    LabeledGraph whole;
    /// TS_k(G1) (s = k), TS_k(G2) (s = 0), then s = 1..k-1.
    std::vector<DecompositionPart> parts;
    /// Edges of TS_k(join) joining different parts.
    std::vector<Edge> cross_edges;
};

/// Throws NoStableSetOfSizeK unless both graphs have a stable k-set.
Decomposition decompose_join(const JoinSpec& spec);

/// True iff every stable k-set S of G_i has |S n H_i| != 1 (side 1 or 2).
bool check_disconnection(const JoinSpec& spec, int side);

/// True iff no TS_k(join) edge leaves the TS_k(G_i) part.
bool part_is_detached(const Decomposition& d, int side);

nlohmann::json decomposition_to_json(const Decomposition& d);

}  // namespace tokenslide

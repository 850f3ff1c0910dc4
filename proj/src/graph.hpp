#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace tokenslide {

using Edge = std::pair<std::size_t, std::size_t>;

/// Plain adjacency-list graph with no vertex cap. Reconfiguration graphs and
/// every structural predicate run on this form.
class AdjacencyList {
public:
    AdjacencyList() = default;
    explicit AdjacencyList(std::size_t n) : rows_(n) {}

    std::size_t order() const { return rows_.size(); }
    std::size_t size() const { return edge_count_; }

    /// Adds uv unless present. Caller guarantees u != v and both < order().
    bool add_edge(std::size_t u, std::size_t v);
    /// Adds uv without the duplicate check.
    void add_new_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;

    std::span<const std::uint32_t> neighbors(std::size_t v) const { return rows_[v]; }
    std::size_t degree(std::size_t v) const { return rows_[v].size(); }

    /// All edges (u < v), sorted.
    std::vector<Edge> edges() const;

    /// Sorts every row ascending.
    void finalize();

    friend bool operator==(const AdjacencyList&, const AdjacencyList&) = default;

private:
    std::vector<std::vector<std::uint32_t>> rows_;
    std::size_t edge_count_ = 0;
};

/// Simple undirected graph on 0..n-1 with bit-vector adjacency rows.
class Graph {
public:
    Graph() = default;

    /// Validates endpoints, rejects loops, deduplicates.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
    explicit Graph(std::size_t n);

    std::size_t order() const { return adj_.size(); }
    std::size_t size() const;

    const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::range(order()); }

    /// Union of N(v) over v in s.
    VertexSet neighborhood(const VertexSet& s) const;

    void add_edge(std::size_t u, std::size_t v);
    std::vector<Edge> edges() const;

    const std::vector<std::string>& names() const { return names_; }
    void set_names(std::vector<std::string> names);

    AdjacencyList to_adjacency() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void check_vertex(std::size_t v) const;

    std::vector<VertexSet> adj_;
    std::vector<std::string> names_;
};

Graph make_graph(std::size_t n, std::span<const Edge> edges);

Graph complement(const Graph& g);

/// Subgraph induced on keep, relabelled to 0..|keep|-1 in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Image of g under vertex map perm (perm[v] is the new index of v).
Graph relabel(const Graph& g, std::span<const std::size_t> perm);

bool is_subset_of_vertices(const Graph& g, const VertexSet& s);

// Generators. Vertex orders are canonical: path/cycle consecutive,
// bipartite parts contiguous (left part first).
Graph edgeless(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t m, std::size_t n);
/// K_{1,n}; vertex 0 is the centre.
Graph star(std::size_t n);
/// K_n minus the edge {0, 1}.
Graph complete_minus_edge(std::size_t n);
Graph add_isolated(const Graph& g, std::size_t t);
/// g2 indices shifted by |V(g1)|.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Triangle {0,1,2} plus pendant 3 on vertex 0.
Graph paw();
/// Diamond {0..3} (missing edge 0-1) plus leaf 4 on vertex 0.
Graph kite();
Graph diamond();
Graph claw();

/// H1,H2 join: disjoint union with every H1 x H2 edge added (H2 offset by |V(g1)|).
Graph join(const Graph& g1, const VertexSet& h1, const Graph& g2, const VertexSet& h2);

/// Complete join of all parts: every vertex of one part adjacent to every vertex of any other.
Graph complete_join(std::span<const Graph> parts);

}  // namespace tokenslide

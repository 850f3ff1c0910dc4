#include "graph.hpp"

#include <algorithm>
#include <sstream>

namespace tokenslide {

bool AdjacencyList::add_edge(std::size_t u, std::size_t v) {
    auto& ru = rows_[u];
    if (std::find(ru.begin(), ru.end(), v) != ru.end()) return false;
    ru.push_back(static_cast<std::uint32_t>(v));
    rows_[v].push_back(static_cast<std::uint32_t>(u));
    ++edge_count_;
    return true;
}

void AdjacencyList::add_new_edge(std::size_t u, std::size_t v) {
    rows_[u].push_back(static_cast<std::uint32_t>(v));
    rows_[v].push_back(static_cast<std::uint32_t>(u));
    ++edge_count_;
}

bool AdjacencyList::has_edge(std::size_t u, std::size_t v) const {
    const auto& ru = rows_[u];
    return std::find(ru.begin(), ru.end(), v) != ru.end();
}

std::vector<Edge> AdjacencyList::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < rows_.size(); ++u)
        for (auto v : rows_[u])
            if (u < v) out.emplace_back(u, v);
    std::sort(out.begin(), out.end());
    return out;
}

void AdjacencyList::finalize() {
    for (auto& r : rows_) std::sort(r.begin(), r.end());
}

Graph::Graph(std::size_t n) {
    if (n > kMaxVertices) {
        std::ostringstream os;
        os << "graph order " << n << " exceeds vertex-set width " << kMaxVertices;
        fail(ErrorCode::NExceedsWidth, os.str());
    }
    adj_.resize(n);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(std::size_t v) const {
    if (v >= order()) {
        std::ostringstream os;
        os << "vertex " << v << " out of range for order " << order();
        fail(ErrorCode::IndexOutOfRange, os.str());
    }
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
}

std::size_t Graph::size() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.size();
    return twice / 2;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
    VertexSet out;
    s.for_each([&](std::size_t v) { out |= adj_[v]; });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < order(); ++u)
        adj_[u].for_each([&](std::size_t v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

void Graph::set_names(std::vector<std::string> names) {
    if (!names.empty() && names.size() != order())
        fail(ErrorCode::InvalidArgument, "name count does not match graph order");
    names_ = std::move(names);
}

AdjacencyList Graph::to_adjacency() const {
    AdjacencyList a(order());
    for (auto [u, v] : edges()) a.add_edge(u, v);
    a.finalize();
    return a;
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph complement(const Graph& g) {
    Graph out(g.order());
    for (std::size_t u = 0; u < g.order(); ++u)
        for (std::size_t v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    if (!g.names().empty()) out.set_names(g.names());
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (!is_subset_of_vertices(g, keep)) fail(ErrorCode::SubsetViolation, "induced subgraph vertex set not within graph");
    auto verts = keep.elements();
    std::vector<std::size_t> index(g.order(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    Graph out(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        (g.neighbors(verts[i]) & keep).for_each([&](std::size_t w) {
            if (index[w] > i) out.add_edge(i, index[w]);
        });
    return out;
}

Graph relabel(const Graph& g, std::span<const std::size_t> perm) {
    if (perm.size() != g.order()) fail(ErrorCode::InvalidArgument, "permutation size mismatch");
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

bool is_subset_of_vertices(const Graph& g, const VertexSet& s) { return s.is_subset_of(g.vertices()); }

Graph edgeless(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "path needs n >= 1");
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(std::size_t n) {
    if (n < 3) fail(ErrorCode::CycleTooSmall, "cycle needs n >= 3, got " + std::to_string(n));
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete(std::size_t n) {
    if (n == 0) fail(ErrorCode::InvalidArgument, "complete graph needs n >= 1");
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) fail(ErrorCode::InvalidArgument, "complete bipartite needs m, n >= 1");
    Graph g(m + n);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

Graph star(std::size_t n) { return complete_bipartite(1, n); }

Graph complete_minus_edge(std::size_t n) {
    if (n < 2) fail(ErrorCode::InvalidArgument, "K_n - e needs n >= 2");
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!(u == 0 && v == 1)) g.add_edge(u, v);
    return g;
}

Graph add_isolated(const Graph& g, std::size_t t) {
    Graph out(g.order() + t);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const auto off = g1.order();
    Graph out(off + g2.order());
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(off + u, off + v);
    return out;
}

Graph paw() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }
Graph diamond() { return complete_minus_edge(4); }
Graph claw() { return star(3); }
Graph kite() { return Graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}}); }

Graph join(const Graph& g1, const VertexSet& h1, const Graph& g2, const VertexSet& h2) {
    if (!is_subset_of_vertices(g1, h1)) fail(ErrorCode::SubsetViolation, "H1 is not a subset of V(G1)");
    if (!is_subset_of_vertices(g2, h2)) fail(ErrorCode::SubsetViolation, "H2 is not a subset of V(G2)");
    Graph out = disjoint_union(g1, g2);
    const auto off = g1.order();
    h1.for_each([&](std::size_t u) { h2.for_each([&](std::size_t v) { out.add_edge(u, off + v); }); });
    return out;
}

Graph complete_join(std::span<const Graph> parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.order();
    Graph out(total);
    std::size_t off = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) out.add_edge(off + u, off + v);
        for (std::size_t u = off; u < off + p.order(); ++u)
            for (std::size_t v = off + p.order(); v < total; ++v) out.add_edge(u, v);
        off += p.order();
    }
    return out;
}

}  // namespace tokenslide

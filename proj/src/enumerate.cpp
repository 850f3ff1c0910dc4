#include "enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "canonical.hpp"

namespace tokenslide {
namespace {

void check_order(std::size_t n, std::size_t lo, std::size_t hi, const char* what) {
    if (n < lo || n > hi)
        fail(ErrorCode::NTooLarge, std::string(what) + " enumeration supports " + std::to_string(lo) + " <= n <= " +
                                       std::to_string(hi) + ", got " + std::to_string(n));
}

/// Sorted canonical representatives of the candidates.
std::vector<Graph> dedup(const std::vector<Graph>& candidates) {
    std::map<CanonicalForm, Graph> classes;
    for (const auto& g : candidates) {
        auto lab = canonical_labeling(g.to_adjacency());
        if (!classes.contains(lab.form)) classes.emplace(std::move(lab.form), relabel(g, lab.position));
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [form, g] : classes) out.push_back(std::move(g));
    return out;
}

bool connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen = VertexSet::singleton(0), frontier = seen;
    while (!frontier.empty()) {
        frontier = g.neighborhood(frontier) - seen;
        seen |= frontier;
    }
    return seen.size() == g.order();
}

std::mutex cache_mutex;
std::map<std::size_t, std::vector<Graph>> tree_cache, graph_cache;

}  // namespace

std::vector<Graph> enumerate_trees(std::size_t n) {
    check_order(n, 1, kMaxTreeOrder, "tree");
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = tree_cache.find(n); it != tree_cache.end()) return it->second;
    }
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(Graph(1));
    } else {
        // Every tree on n vertices is a tree on n-1 vertices plus a leaf.
        std::vector<Graph> candidates;
        for (const auto& t : enumerate_trees(n - 1))
            for (std::size_t v = 0; v + 1 < n; ++v) {
                Graph g = add_isolated(t, 1);
                g.add_edge(v, n - 1);
                candidates.push_back(std::move(g));
            }
        out = dedup(candidates);
    }
    std::lock_guard lock(cache_mutex);
    tree_cache.emplace(n, out);
    return out;
}

std::vector<Graph> enumerate_graphs(std::size_t n) {
    check_order(n, 0, kMaxGraphOrder, "graph");
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = graph_cache.find(n); it != graph_cache.end()) return it->second;
    }
    std::vector<Graph> out;
    if (n == 0) {
        out.push_back(Graph(0));
    } else {
        // Every graph on n vertices is one on n-1 vertices plus a vertex
        // joined to some subset of them.
        std::vector<Graph> candidates;
        for (const auto& h : enumerate_graphs(n - 1))
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
                Graph g = add_isolated(h, 1);
                for (std::size_t v = 0; v + 1 < n; ++v)
                    if ((mask >> v) & 1U) g.add_edge(v, n - 1);
                candidates.push_back(std::move(g));
            }
        out = dedup(candidates);
    }
    std::lock_guard lock(cache_mutex);
    graph_cache.emplace(n, out);
    return out;
}

std::vector<Graph> enumerate_connected_graphs(std::size_t n) {
    check_order(n, 1, kMaxConnectedOrder, "connected graph");
    std::vector<Graph> out;
    for (auto& g : enumerate_graphs(n))
        if (connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace tokenslide

#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "graph.hpp"
#include "vertex_set.hpp"

namespace support {

inline tokenslide::VertexSet vs(std::initializer_list<std::size_t> items) {
    tokenslide::VertexSet s;
    for (auto v : items) s.insert(v);
    return s;
}

inline std::uint64_t mask(const tokenslide::VertexSet& s) { return s.words()[0]; }

inline std::vector<std::uint64_t> masks(const std::vector<tokenslide::VertexSet>& sets) {
    std::vector<std::uint64_t> out;
    for (const auto& s : sets) out.push_back(mask(s));
    return out;
}

/// G(n, p) with a caller-owned engine.
inline tokenslide::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    tokenslide::Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline tokenslide::VertexSet random_subset(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution coin(p);
    tokenslide::VertexSet s;
    for (std::size_t v = 0; v < n; ++v)
        if (coin(rng)) s.insert(v);
    return s;
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace support

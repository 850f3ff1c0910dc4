#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace tokenslide {

inline constexpr std::size_t kDefaultIsoBudget = 2'000'000;

/// Graph relabelled into its canonical vertex order. Two graphs have equal
/// forms iff they are isomorphic.
struct CanonicalForm {
    std::size_t order = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    /// position[v] is v's index in the canonical order.
    std::vector<std::size_t> position;
};

/// Colour refinement seeded with degree, then individualisation with
/// automorphism pruning. Throws TooLargeForIso once more than budget search
/// nodes are visited.
CanonicalLabeling canonical_labeling(const AdjacencyList& g, std::size_t budget = kDefaultIsoBudget);

CanonicalForm canonical_form(const AdjacencyList& g, std::size_t budget = kDefaultIsoBudget);
CanonicalForm canonical_form(const Graph& g, std::size_t budget = kDefaultIsoBudget);

bool is_isomorphic(const AdjacencyList& a, const AdjacencyList& b, std::size_t budget = kDefaultIsoBudget);
bool is_isomorphic(const Graph& a, const Graph& b, std::size_t budget = kDefaultIsoBudget);

/// A bijection f with uv in E(a) iff f(u)f(v) in E(b), if one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const AdjacencyList& a, const AdjacencyList& b,
                                                         std::size_t budget = kDefaultIsoBudget);

/// True iff f is a bijection V(a) -> V(b) preserving adjacency both ways.
bool verify_isomorphism(const AdjacencyList& a, const AdjacencyList& b, const std::vector<std::size_t>& f);

/// Graph with vertices renumbered by canonical position.
Graph canonical_graph(const Graph& g);

}  // namespace tokenslide

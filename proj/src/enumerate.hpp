#pragma once

#include <cstddef>
#include <vector>

#include "graph.hpp"

namespace tokenslide {

inline constexpr std::size_t kMaxTreeOrder = 10;
inline constexpr std::size_t kMaxGraphOrder = 8;
inline constexpr std::size_t kMaxConnectedOrder = 7;

// Each list holds one canonically labelled representative per isomorphism
// class, sorted by canonical form.

/// Trees on n vertices, 1 <= n <= 10. Throws NTooLarge.
std::vector<Graph> enumerate_trees(std::size_t n);

/// All graphs on n vertices, 0 <= n <= 8. Throws NTooLarge.
std::vector<Graph> enumerate_graphs(std::size_t n);

/// Connected graphs on n vertices, 1 <= n <= 7. Throws NTooLarge.
std::vector<Graph> enumerate_connected_graphs(std::size_t n);

}  // namespace tokenslide

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "stable_sets.hpp"

namespace tokenslide {

/// A base graph whose TS_k graph is isomorphic to target.
struct Realization {
    Graph target;
    std::size_t k = 0;
    Graph base;
    /// Node i of build_TSk(base, k) maps to vertex witness_iso[i] of target.
    std::vector<std::size_t> witness_iso;
};

/// Builds TS_k(base) and checks it against target, via the given map or by
/// isomorphism search. Throws Internal if the check fails.
Realization make_realization(const Graph& target, std::size_t k, const Graph& base,
                             std::optional<std::vector<std::size_t>> map = std::nullopt);

/// K_n plus k-1 isolated vertices.
Realization realize_complete(std::size_t n, std::size_t k);
/// Complement of P_{n+1} plus k-2 isolated vertices.
Realization realize_path(std::size_t n, std::size_t k);
/// Complement of C_n plus k-2 isolated vertices; C_3 uses the K_n construction.
Realization realize_cycle(std::size_t n, std::size_t k);
/// Stable a_1..a_k, clique b_1..b_n, matching a_i b_i. Throws NExceedsK.
Realization realize_star(std::size_t n, std::size_t k);

/// Checks the realizability condition on the K-max partition of a connected
/// split graph. Throws NotConnected or NotSplit.
bool split_realizable(const Graph& f, std::size_t k);

/// Stable set a_1..a_{k-1}, clique on the stable side's images x, clique
/// b_1..b_m on K. Throws ConditionViolated naming the failing vertex.
Realization realize_split(const Graph& f, std::size_t k);

/// Adds v_G adjacent to every vertex outside the independent set i.
/// Throws NotIndependent.
Graph extend_with_vG(const Graph& g, const VertexSet& i);

/// Complete join of the part bases; realizes the disjoint union of targets.
/// Throws KMismatch.
Realization realize_disjoint_union(std::span<const Realization> parts, std::size_t k);

struct RealizerSearch {
    std::optional<Realization> found;
    /// Every base with at most this many vertices was ruled out (when not found).
    std::size_t none_up_to = 0;
    std::size_t candidates_built = 0;
};

/// Tries every graph on k..max_n vertices in canonical order. Throws NTooLarge
/// for max_n > 8.
RealizerSearch search_realizer(const Graph& target, std::size_t k, std::size_t max_n, unsigned threads = 1);

nlohmann::json realization_to_json(const Realization& r);

}  // namespace tokenslide

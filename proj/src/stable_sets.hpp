#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace tokenslide {

/// Default cap on enumerated stable sets / reconfiguration-graph nodes.
inline constexpr std::size_t kDefaultNodeBudget = std::size_t{1} << 22;

/// Independent sets of one host graph, lexicographically ordered.
struct StableSetFamily {
    std::size_t host_order = 0;
    std::optional<std::size_t> k;  // nullopt: all sizes
    std::vector<VertexSet> members;

    std::size_t size() const { return members.size(); }
};

bool is_independent(const Graph& g, const VertexSet& s);
bool is_clique(const Graph& g, const VertexSet& s);

/// All size-k independent sets contained in within (default: all of V).
StableSetFamily independent_sets_of_size(const Graph& g, std::size_t k, std::size_t budget = kDefaultNodeBudget,
                                         std::optional<VertexSet> within = std::nullopt);

/// Number of size-k independent sets, without materialising them.
std::size_t count_independent_sets_of_size(const Graph& g, std::size_t k);

/// All non-empty independent sets. Throws ExplosionCap past budget.
StableSetFamily all_independent_sets(const Graph& g, std::size_t budget = kDefaultNodeBudget);

std::size_t alpha(const Graph& g);
std::size_t omega(const Graph& g);
std::vector<VertexSet> cliques_of_size(const Graph& g, std::size_t k, std::size_t budget = kDefaultNodeBudget);

/// KS-partition: K a clique, S an independent set, K and S partition V.
struct KSPartition {
    VertexSet clique;
    VertexSet stable;

    friend bool operator==(const KSPartition&, const KSPartition&) = default;
};

/// Every KS-partition whose K is a maximum clique, ordered by K.
std::vector<KSPartition> kmax_partitions(const Graph& g);

bool is_split(const Graph& g);

/// The K-max partition with the lexicographically least K. Throws NotSplit.
KSPartition kmax_partition(const Graph& g);

/// Sorted list of sorted vertex index arrays.
nlohmann::json family_to_json(const StableSetFamily& f);

}  // namespace tokenslide

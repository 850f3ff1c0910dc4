#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace tokenslide {

/// Non-negative length or infinity (girth of a forest, diameter of a
/// disconnected graph).
class Length {
public:
    static Length infinite() { return Length(); }
    static Length of(std::size_t v) { return Length(v); }

    bool is_infinite() const { return !value_; }
    std::size_t value() const { return *value_; }

    friend bool operator==(const Length&, const Length&) = default;

    nlohmann::json to_json() const;

private:
    Length() = default;
    explicit Length(std::size_t v) : value_(v) {}
    std::optional<std::size_t> value_;
};

std::vector<std::vector<std::size_t>> components(const AdjacencyList& g);
bool is_connected(const AdjacencyList& g);
/// Infinite if disconnected; 0 for graphs with at most one node.
Length diameter(const AdjacencyList& g);
/// Shortest cycle length; Infinite for forests.
Length girth(const AdjacencyList& g);

/// Connected with every degree even.
bool is_eulerian(const AdjacencyList& g);
/// Every component is Eulerian.
bool components_eulerian(const AdjacencyList& g);

std::size_t clique_number(const AdjacencyList& g);
bool has_clique(const AdjacencyList& g, std::size_t s);

/// Exact chromatic number: DSATUR branch and bound seeded with a maximum clique.
std::size_t chromatic_number(const AdjacencyList& g);
bool is_s_partite(const AdjacencyList& g, std::size_t s);

enum class KuratowskiType { K5, K33 };

/// Edge set of a subdivision of K5 or K3,3 inside the queried graph.
struct KuratowskiWitness {
    KuratowskiType type = KuratowskiType::K33;
    std::vector<Edge> edges;
    std::vector<std::size_t> branch_vertices;
};

/// Checks that edges lie in g and form a subdivision of K5 or K3,3.
std::optional<KuratowskiWitness> classify_kuratowski(const AdjacencyList& g, const std::vector<Edge>& edges);

struct PlanarityResult {
    bool planar = true;
    std::optional<KuratowskiWitness> witness;
};

PlanarityResult is_planar(const AdjacencyList& g);
/// Verdict only; skips witness extraction.
bool planar(const AdjacencyList& g);

struct PropertyReport {
    std::size_t order = 0;
    std::size_t size = 0;
    std::size_t chromatic = 0;
    PlanarityResult planarity;
    bool eulerian = false;
    bool components_eulerian = false;
    Length girth = Length::infinite();
    std::size_t clique_number = 0;
    bool connected = true;
    Length diameter = Length::of(0);
    std::size_t component_count = 0;
};

PropertyReport analyze(const AdjacencyList& g);
nlohmann::json report_to_json(const PropertyReport& r);

}  // namespace tokenslide

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"
#include "reconf.hpp"

namespace tokenslide {

inline constexpr std::int64_t kMaxCoordinate = 1'000'000;
inline constexpr std::size_t kMaxTriangulationPoints = 10;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

using PointSet = std::vector<Point>;

/// Sign of the orientation determinant: +1 counter-clockwise, -1 clockwise, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// +1 if d lies strictly inside the circle through a, b, c (any orientation),
/// -1 if outside, 0 if on it. a, b, c must not be collinear.
int in_circle(const Point& a, const Point& b, const Point& c, const Point& d);

struct GeneralPosition {
    bool ok = true;
    /// The first violating tuple (point indices): 2 for a duplicate, 3 for a
    /// collinear triple, 4 for a co-circular quadruple.
    std::vector<std::size_t> witness;
    std::string message;
};

/// Throws TooFewPoints below 3 points and CoordinateRange past the bound.
GeneralPosition check_general_position(const PointSet& p);

/// Proper crossing at an interior point of both segments. Throws DegenerateSegment.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Segments between point pairs (i < j). Crossing segments become graph
/// vertices; the rest form fixed.
struct SegmentGraph {
    std::vector<Edge> segments;
    Graph graph;
    std::vector<Edge> fixed;
};

/// Throws GeneralPositionViolated.
SegmentGraph edge_intersection_graph(const PointSet& p);

/// A triangulation: every segment, sorted, plus its crossing part as a stable
/// set of the edge intersection graph.
struct Triangulation {
    std::vector<Edge> segments;
    VertexSet stable;
};

/// All maximal non-crossing segment sets, ordered by stable part. Throws
/// TooManyPoints above 10 points.
std::vector<Triangulation> triangulations(const PointSet& p);

/// Nodes: triangulations (labelled by stable part); edges: single diagonal flips.
LabeledGraph flip_graph(const PointSet& p);

/// The triangulation whose triangles all have empty circumcircles.
std::vector<Edge> delaunay(const PointSet& p);

struct LawsonRun {
    std::vector<Edge> result;
    std::size_t flips = 0;
};

/// Repeatedly flips the lowest-index locally non-Delaunay diagonal of t.
LawsonRun lawson_flip(const PointSet& p, const std::vector<Edge>& t);
std::size_t lawson_distance(const std::vector<Edge>& t, const PointSet& p);

PointSet points_from_json(const nlohmann::json& j);
nlohmann::json points_to_json(const PointSet& p);

}  // namespace tokenslide

#include "geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tokenslide {
namespace {

using Wide = __int128;

int sign(Wide v) { return (v > 0) - (v < 0); }

void check_range(const PointSet& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i].x < -kMaxCoordinate || p[i].x > kMaxCoordinate || p[i].y < -kMaxCoordinate ||
            p[i].y > kMaxCoordinate)
            fail(ErrorCode::CoordinateRange, "point " + std::to_string(i) + " exceeds |coordinate| <= 1e6");
}

void require_general_position(const PointSet& p) {
    auto gp = check_general_position(p);
    if (!gp.ok) fail(ErrorCode::GeneralPositionViolated, gp.message);
}

std::string tuple_text(const std::vector<std::size_t>& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    return os.str();
}

/// Maximal cliques of the complement of g, i.e. maximal stable sets of g.
void maximal_stable_sets(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
    if (p.empty()) {
        if (x.empty()) out.push_back(r);
        return;
    }
    auto non_neighbours = [&](std::size_t v) {
        VertexSet s = g.vertices() - g.neighbors(v);
        s.erase(v);
        return s;
    };
    std::size_t pivot = (p | x).first(), best = 0;
    (p | x).for_each([&](std::size_t u) {
        auto c = (p & non_neighbours(u)).size();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    (p - non_neighbours(pivot)).for_each([&](std::size_t v) {
        auto nv = non_neighbours(v);
        VertexSet r2 = r;
        r2.insert(v);
        maximal_stable_sets(g, r2, p & nv, x & nv, out);
        p.erase(v);
        x.insert(v);
    });
}

struct SegmentIndex {
    explicit SegmentIndex(std::size_t n) : n(n) {}
    std::size_t of(std::size_t a, std::size_t b) const {
        if (a > b) std::swap(a, b);
        return a * n - a * (a + 1) / 2 + (b - a - 1);
    }
    std::size_t n;
};

/// Third vertex of the face on the given side of ab, if any.
std::optional<std::size_t> face_vertex(const PointSet& p, const std::set<Edge>& t, std::size_t a, std::size_t b,
                                       int side) {
    auto has = [&](std::size_t u, std::size_t v) { return t.contains(std::minmax(u, v)); };
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (c == a || c == b || orientation(p[a], p[b], p[c]) != side || !has(a, c) || !has(b, c)) continue;
        bool empty = true;
        for (std::size_t q = 0; q < p.size() && empty; ++q) {
            if (q == a || q == b || q == c) continue;
            empty = !(orientation(p[a], p[b], p[q]) == side && orientation(p[b], p[c], p[q]) == side &&
                      orientation(p[c], p[a], p[q]) == side);
        }
        if (empty) return c;
    }
    return std::nullopt;
}

}  // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
    Wide d = Wide(b.x - a.x) * (c.y - a.y) - Wide(b.y - a.y) * (c.x - a.x);
    return sign(d);
}

int in_circle(const Point& a, const Point& b, const Point& c, const Point& d) {
    Wide adx = a.x - d.x, ady = a.y - d.y;
    Wide bdx = b.x - d.x, bdy = b.y - d.y;
    Wide cdx = c.x - d.x, cdy = c.y - d.y;
    Wide ad = adx * adx + ady * ady, bd = bdx * bdx + bdy * bdy, cd = cdx * cdx + cdy * cdy;
    Wide det = adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) + ad * (bdx * cdy - bdy * cdx);
    return sign(det) * orientation(a, b, c);
}

GeneralPosition check_general_position(const PointSet& p) {
    if (p.size() < 3) fail(ErrorCode::TooFewPoints, "need at least 3 points, got " + std::to_string(p.size()));
    check_range(p);
    GeneralPosition out;
    auto violate = [&](std::vector<std::size_t> t, const char* what) {
        out.ok = false;
        out.message = std::string(what) + " points " + tuple_text(t);
        out.witness = std::move(t);
    };
    const auto n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p[i] == p[j]) {
                violate({i, j}, "duplicate");
                return out;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (orientation(p[i], p[j], p[k]) == 0) {
                    violate({i, j, k}, "collinear");
                    return out;
                }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    if (in_circle(p[i], p[j], p[k], p[l]) == 0) {
                        violate({i, j, k, l}, "co-circular");
                        return out;
                    }
    return out;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    if (a == b || c == d) fail(ErrorCode::DegenerateSegment, "segment endpoints coincide");
    if (a == c || a == d || b == c || b == d) return false;
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

SegmentGraph edge_intersection_graph(const PointSet& p) {
    require_general_position(p);
    const auto n = p.size();
    std::vector<Edge> all;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) all.emplace_back(i, j);
    std::vector<std::vector<std::size_t>> crosses(all.size());
    for (std::size_t s = 0; s < all.size(); ++s)
        for (std::size_t t = s + 1; t < all.size(); ++t)
            if (segments_intersect(p[all[s].first], p[all[s].second], p[all[t].first], p[all[t].second])) {
                crosses[s].push_back(t);
                crosses[t].push_back(s);
            }
    SegmentGraph out;
    std::vector<std::size_t> vertex(all.size(), all.size());
    for (std::size_t s = 0; s < all.size(); ++s) {
        if (crosses[s].empty()) {
            out.fixed.push_back(all[s]);
        } else {
            vertex[s] = out.segments.size();
            out.segments.push_back(all[s]);
        }
    }
    out.graph = Graph(out.segments.size());
    for (std::size_t s = 0; s < all.size(); ++s)
        for (auto t : crosses[s])
            if (s < t) out.graph.add_edge(vertex[s], vertex[t]);
    std::vector<std::string> names;
    for (auto [a, b] : out.segments) names.push_back(std::to_string(a + 1) + std::to_string(b + 1));
    out.graph.set_names(std::move(names));
    return out;
}

std::vector<Triangulation> triangulations(const PointSet& p) {
    if (p.size() > kMaxTriangulationPoints)
        fail(ErrorCode::TooManyPoints, "triangulation enumeration supports at most 10 points");
    auto sg = edge_intersection_graph(p);
    std::vector<VertexSet> stables;
    maximal_stable_sets(sg.graph, {}, sg.graph.vertices(), {}, stables);
    std::sort(stables.begin(), stables.end());
    std::vector<Triangulation> out;
    for (const auto& s : stables) {
        Triangulation t;
        t.stable = s;
        t.segments = sg.fixed;
        s.for_each([&](std::size_t v) { t.segments.push_back(sg.segments[v]); });
        std::sort(t.segments.begin(), t.segments.end());
        if (!out.empty() && t.segments.size() != out.front().segments.size())
            fail(ErrorCode::Internal, "maximal non-crossing segment sets differ in size");
        out.push_back(std::move(t));
    }
    return out;
}

LabeledGraph flip_graph(const PointSet& p) {
    auto ts = triangulations(p);
    LabeledGraph out;
    out.kind = GraphKind::Flip;
    out.base = edge_intersection_graph(p).graph;
    if (!ts.empty()) out.k = ts.front().stable.size();
    out.adj = AdjacencyList(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out.labels.push_back(ts[i].stable);
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if ((ts[i].stable ^ ts[j].stable).size() == 2) out.adj.add_new_edge(i, j);
    }
    out.adj.finalize();
    return out;
}

std::vector<Edge> delaunay(const PointSet& p) {
    require_general_position(p);
    const auto n = p.size();
    std::set<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                bool empty = true;
                for (std::size_t q = 0; q < n && empty; ++q)
                    if (q != i && q != j && q != k) empty = in_circle(p[i], p[j], p[k], p[q]) < 0;
                if (empty) {
                    edges.insert({i, j});
                    edges.insert({i, k});
                    edges.insert({j, k});
                }
            }
    return {edges.begin(), edges.end()};
}

LawsonRun lawson_flip(const PointSet& p, const std::vector<Edge>& t) {
    require_general_position(p);
    std::set<Edge> current;
    for (auto [a, b] : t) {
        if (a >= p.size() || b >= p.size() || a == b) fail(ErrorCode::InvalidArgument, "bad triangulation segment");
        current.insert(std::minmax(a, b));
    }
    const SegmentIndex index(p.size());
    LawsonRun run;
    while (true) {
        // Lowest-index locally non-Delaunay diagonal.
        std::optional<std::pair<Edge, Edge>> flip;
        std::size_t flip_index = 0;
        for (auto [a, b] : current) {
            auto c = face_vertex(p, current, a, b, 1);
            auto d = face_vertex(p, current, a, b, -1);
            if (!c || !d) continue;
            if (in_circle(p[a], p[b], p[*c], p[*d]) > 0) {
                auto idx = index.of(a, b);
                if (!flip || idx < flip_index) {
                    flip = std::make_pair(Edge{a, b}, Edge(std::minmax(*c, *d)));
                    flip_index = idx;
                }
            }
        }
        if (!flip) break;
        current.erase(flip->first);
        current.insert(flip->second);
        ++run.flips;
    }
    run.result.assign(current.begin(), current.end());
    return run;
}

std::size_t lawson_distance(const std::vector<Edge>& t, const PointSet& p) { return lawson_flip(p, t).flips; }

PointSet points_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_array()) fail(ErrorCode::MalformedInput, "points must be a JSON array");
        PointSet out;
        for (const auto& pt : j) {
            if (!pt.is_array() || pt.size() != 2) fail(ErrorCode::MalformedInput, "point must be an [x, y] pair");
            out.push_back({pt[0].get<std::int64_t>(), pt[1].get<std::int64_t>()});
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::MalformedInput, std::string("point JSON: ") + e.what());
    }
}

nlohmann::json points_to_json(const PointSet& p) {
    auto j = nlohmann::json::array();
    for (const auto& pt : p) j.push_back({pt.x, pt.y});
    return j;
}

}  // namespace tokenslide

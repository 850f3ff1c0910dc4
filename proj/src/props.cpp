#include "props.hpp"

#include <algorithm>
#include <queue>

#include <boost/dynamic_bitset.hpp>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace tokenslide {
namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> bit_rows(const AdjacencyList& g) {
    std::vector<Bits> rows(g.order(), Bits(g.order()));
    for (std::size_t v = 0; v < g.order(); ++v)
        for (auto w : g.neighbors(v)) rows[v].set(w);
    return rows;
}

/// BFS distances from src; -1 for unreachable.
std::vector<long> bfs(const AdjacencyList& g, std::size_t src) {
    std::vector<long> dist(g.order(), -1);
    std::queue<std::size_t> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (auto w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

/// Maximum clique with greedy-colouring bounds. Stops early once target is reached.
class CliqueSearch {
public:
    CliqueSearch(const AdjacencyList& g, std::size_t target) : rows_(bit_rows(g)), target_(target) {}

    std::vector<std::size_t> run() {
        if (rows_.empty()) return {};
        Bits all(rows_.size());
        all.set();
        std::vector<std::size_t> current;
        expand(current, all);
        return best_;
    }

private:
    void expand(std::vector<std::size_t>& current, Bits p) {
        std::vector<std::size_t> order, color;
        greedy_colour(p, order, color);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (done() || current.size() + color[i] <= best_.size()) return;
            auto v = order[i];
            current.push_back(v);
            Bits next = p & rows_[v];
            if (next.none()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            p.reset(v);
        }
    }

    void greedy_colour(const Bits& p, std::vector<std::size_t>& order, std::vector<std::size_t>& color) const {
        Bits uncoloured = p;
        std::size_t k = 0;
        while (uncoloured.any()) {
            ++k;
            Bits q = uncoloured;
            for (auto v = q.find_first(); v != Bits::npos; v = q.find_next(v)) {
                uncoloured.reset(v);
                q -= rows_[v];
                order.push_back(v);
                color.push_back(k);
            }
        }
    }

    bool done() const { return best_.size() >= target_; }

    std::vector<Bits> rows_;
    std::size_t target_;
    std::vector<std::size_t> best_;
};

class Colouring {
public:
    explicit Colouring(const AdjacencyList& g)
        : g_(g), n_(g.order()), colour_(n_, kNone), counts_(n_, std::vector<std::uint32_t>(n_ + 1, 0)),
          sat_(n_, 0) {}

    std::size_t run() {
        if (n_ == 0) return 0;
        auto clique = CliqueSearch(g_, n_ + 1).run();
        lower_ = clique.size();
        best_ = greedy_bound();
        if (best_ == lower_) return best_;
        for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], i);
        search(clique.size(), clique.size());
        return best_;
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    void assign(std::size_t v, std::size_t c) {
        colour_[v] = c;
        for (auto w : g_.neighbors(v))
            if (counts_[w][c]++ == 0) ++sat_[w];
    }

    void unassign(std::size_t v) {
        auto c = colour_[v];
        colour_[v] = kNone;
        for (auto w : g_.neighbors(v))
            if (--counts_[w][c] == 0) --sat_[w];
    }

    /// Uncoloured vertex of maximum saturation, ties by uncoloured degree then index.
    std::size_t pick() const {
        std::size_t best = kNone, best_sat = 0, best_deg = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colour_[v] != kNone) continue;
            std::size_t deg = 0;
            for (auto w : g_.neighbors(v)) deg += colour_[w] == kNone;
            if (best == kNone || sat_[v] > best_sat || (sat_[v] == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat_[v];
                best_deg = deg;
            }
        }
        return best;
    }

    std::size_t greedy_bound() {
        std::size_t used = 0;
        for (std::size_t step = 0; step < n_; ++step) {
            auto v = pick();
            std::size_t c = 0;
            while (counts_[v][c]) ++c;
            assign(v, c);
            used = std::max(used, c + 1);
        }
        for (std::size_t v = 0; v < n_; ++v) unassign(v);
        return used;
    }

    void search(std::size_t coloured, std::size_t used) {
        if (best_ == lower_) return;
        if (coloured == n_) {
            best_ = used;
            return;
        }
        auto v = pick();
        for (std::size_t c = 0; c <= used && std::max(used, c + 1) < best_; ++c) {
            if (counts_[v][c]) continue;
            assign(v, c);
            search(coloured + 1, std::max(used, c + 1));
            unassign(v);
            if (best_ == lower_) return;
        }
    }

    const AdjacencyList& g_;
    std::size_t n_;
    std::vector<std::size_t> colour_;
    std::vector<std::vector<std::uint32_t>> counts_;
    std::vector<std::size_t> sat_;
    std::size_t lower_ = 0;
    std::size_t best_ = 0;
};

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const AdjacencyList& g, const std::vector<Edge>& edges) {
    BoostGraph bg(g.order());
    int i = 0;
    for (auto [u, v] : edges) {
        auto e = boost::add_edge(u, v, bg).first;
        boost::put(boost::edge_index, bg, e, i++);
    }
    return bg;
}

bool planar_edges(const AdjacencyList& g, const std::vector<Edge>& edges) {
    auto bg = to_boost(g, edges);
    return boost::boyer_myrvold_planarity_test(bg);
}

/// Minimal non-planar subgraph by greedy edge deletion.
std::vector<Edge> greedy_obstruction(const AdjacencyList& g) {
    auto kept = g.edges();
    for (std::size_t i = 0; i < kept.size();) {
        auto trial = kept;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
        if (!planar_edges(g, trial))
            kept = std::move(trial);
        else
            ++i;
    }
    return kept;
}

}  // namespace

nlohmann::json Length::to_json() const { return is_infinite() ? nlohmann::json("infinite") : nlohmann::json(value()); }

std::vector<std::vector<std::size_t>> components(const AdjacencyList& g) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (auto w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const AdjacencyList& g) { return components(g).size() <= 1; }

Length diameter(const AdjacencyList& g) {
    long best = 0;
    for (std::size_t s = 0; s < g.order(); ++s)
        for (auto d : bfs(g, s)) {
            if (d < 0) return Length::infinite();
            best = std::max(best, d);
        }
    return Length::of(static_cast<std::size_t>(best));
}

Length girth(const AdjacencyList& g) {
    std::size_t best = 0;
    const auto n = g.order();
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<long> dist(n, -1);
        std::vector<std::size_t> parent(n, n);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            auto u = q.front();
            q.pop();
            for (auto w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best == 0 ? Length::infinite() : Length::of(best);
}

bool components_eulerian(const AdjacencyList& g) {
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(v) % 2) return false;
    return true;
}

bool is_eulerian(const AdjacencyList& g) { return is_connected(g) && components_eulerian(g); }

std::size_t clique_number(const AdjacencyList& g) { return CliqueSearch(g, g.order() + 1).run().size(); }

bool has_clique(const AdjacencyList& g, std::size_t s) {
    if (s == 0) return true;
    return CliqueSearch(g, s).run().size() >= s;
}

std::size_t chromatic_number(const AdjacencyList& g) { return Colouring(g).run(); }

bool is_s_partite(const AdjacencyList& g, std::size_t s) { return chromatic_number(g) <= s; }

std::optional<KuratowskiWitness> classify_kuratowski(const AdjacencyList& g, const std::vector<Edge>& edges) {
    const auto n = g.order();
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n || u == v || !g.has_edge(u, v)) return std::nullopt;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end()) return std::nullopt;
    }

    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v) {
        auto d = adj[v].size();
        if (d >= 3) branch.push_back(v);
        else if (d == 1) return std::nullopt;
    }
    KuratowskiWitness w;
    if (branch.size() == 5) {
        w.type = KuratowskiType::K5;
        for (auto b : branch)
            if (adj[b].size() != 4) return std::nullopt;
    } else if (branch.size() == 6) {
        w.type = KuratowskiType::K33;
        for (auto b : branch)
            if (adj[b].size() != 3) return std::nullopt;
    } else {
        return std::nullopt;
    }

    // Smooth every degree-2 vertex: walk each branch edge to the next branch vertex.
    std::vector<int> slot(n, -1);
    for (std::size_t i = 0; i < branch.size(); ++i) slot[branch[i]] = static_cast<int>(i);
    std::vector<std::vector<bool>> link(branch.size(), std::vector<bool>(branch.size(), false));
    std::size_t walked = 0;
    for (auto b : branch)
        for (auto start : adj[b]) {
            std::size_t prev = b, cur = start;
            ++walked;
            while (slot[cur] < 0) {
                auto next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                ++walked;
                if (walked > 2 * edges.size()) return std::nullopt;
            }
            if (cur == b) return std::nullopt;
            auto i = static_cast<std::size_t>(slot[b]), j = static_cast<std::size_t>(slot[cur]);
            if (link[i][j] && i < j) return std::nullopt;
            if (i < j) link[i][j] = link[j][i] = true;
        }
    // Each path is walked once from each end; leftover edges would be stray cycles.
    if (walked != 2 * edges.size()) return std::nullopt;

    const auto m = branch.size();
    if (w.type == KuratowskiType::K5) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                if (!link[i][j]) return std::nullopt;
    } else {
        std::vector<int> side(m, -1);
        side[0] = 0;
        for (std::size_t pass = 0; pass < m; ++pass)
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    if (link[i][j] && side[i] >= 0) {
                        if (side[j] < 0) side[j] = 1 - side[i];
                        else if (side[j] == side[i]) return std::nullopt;
                    }
        if (std::count(side.begin(), side.end(), 0) != 3 || std::count(side.begin(), side.end(), 1) != 3)
            return std::nullopt;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (side[i] != side[j] && !link[i][j]) return std::nullopt;
    }
    w.edges = edges;
    for (auto& e : w.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(w.edges.begin(), w.edges.end());
    w.branch_vertices = branch;
    return w;
}

bool planar(const AdjacencyList& g) { return planar_edges(g, g.edges()); }

PlanarityResult is_planar(const AdjacencyList& g) {
    PlanarityResult out;
    auto bg = to_boost(g, g.edges());
    std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> kuratowski;
    out.planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                     boost::boyer_myrvold_params::kuratowski_subgraph =
                                                         std::back_inserter(kuratowski));
    if (out.planar) return out;
    std::vector<Edge> edges;
    for (auto e : kuratowski) edges.emplace_back(boost::source(e, bg), boost::target(e, bg));
    out.witness = classify_kuratowski(g, edges);
    if (!out.witness) out.witness = classify_kuratowski(g, greedy_obstruction(g));
    if (!out.witness) fail(ErrorCode::Internal, "non-planar graph without a classifiable Kuratowski subgraph");
    return out;
}

PropertyReport analyze(const AdjacencyList& g) {
    PropertyReport r;
    r.order = g.order();
    r.size = g.size();
    r.chromatic = chromatic_number(g);
    r.planarity = is_planar(g);
    r.eulerian = is_eulerian(g);
    r.components_eulerian = components_eulerian(g);
    r.girth = girth(g);
    r.clique_number = clique_number(g);
    r.component_count = components(g).size();
    r.connected = r.component_count <= 1;
    r.diameter = diameter(g);
    return r;
}

nlohmann::json report_to_json(const PropertyReport& r) {
    nlohmann::json j;
    j["order"] = r.order;
    j["size"] = r.size;
    j["chromatic"] = r.chromatic;
    j["planar"] = r.planarity.planar;
    if (r.planarity.witness) {
        const auto& w = *r.planarity.witness;
        nlohmann::json wj;
        wj["type"] = w.type == KuratowskiType::K5 ? "K5" : "K33";
        wj["branch_vertices"] = w.branch_vertices;
        auto edges = nlohmann::json::array();
        for (auto [u, v] : w.edges) edges.push_back({u, v});
        wj["edges"] = std::move(edges);
        j["witness"] = std::move(wj);
    } else {
        j["witness"] = nullptr;
    }
    j["eulerian"] = r.eulerian;
    j["components_eulerian"] = r.components_eulerian;
    j["girth"] = r.girth.to_json();
    j["clique_number"] = r.clique_number;
    j["connected"] = r.connected;
    j["diameter"] = r.diameter.to_json();
    j["component_count"] = r.component_count;
    return j;
}

}  // namespace tokenslide

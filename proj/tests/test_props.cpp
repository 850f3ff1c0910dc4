#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>

#include "enumerate.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "props.hpp"
#include "reconf.hpp"
#include "stable_sets.hpp"
#include "support.hpp"

using namespace tokenslide;

namespace {

/// Node index of a 1-based digit label such as "135".
std::size_t node_of(const LabeledGraph& lg, const std::string& digits) {
    VertexSet s;
    for (char c : digits) s.insert(static_cast<std::size_t>(c - '1'));
    auto idx = lg.find(s);
    REQUIRE(idx);
    return *idx;
}

std::vector<Edge> drawn_edges(const LabeledGraph& lg, const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<Edge> out;
    for (const auto& [a, b] : pairs) out.push_back(std::minmax(node_of(lg, a), node_of(lg, b)));
    return out;
}

void check_witness(const AdjacencyList& g, const PlanarityResult& r) {
    REQUIRE_FALSE(r.planar);
    REQUIRE(r.witness);
    CHECK(oracle::is_kuratowski_subdivision(oracle::of(g), r.witness->edges, r.witness->type == KuratowskiType::K5));
}

/// Girth-7 cycle C_n with a pendant path of the given length on vertex 0.
Graph cycle_with_tail(std::size_t n, std::size_t tail) {
    auto g = add_isolated(cycle(n), tail);
    std::size_t prev = 0;
    for (std::size_t i = 0; i < tail; ++i) {
        g.add_edge(prev, n + i);
        prev = n + i;
    }
    return g;
}

Graph with_universal(const Graph& g) {
    auto out = add_isolated(g, 1);
    for (std::size_t v = 0; v < g.order(); ++v) out.add_edge(v, g.order());
    return out;
}

}  // namespace

TEST_CASE("planarity examples") {
    CHECK(is_planar(build_TSk(path(8), 3).adj).planar);
    CHECK(is_planar(complete(4).to_adjacency()).planar);

    auto p9 = build_TSk(path(9), 3);
    auto r = is_planar(p9.adj);
    check_witness(p9.adj, r);
    CHECK(oracle::is_kuratowski_subdivision(oracle::of(p9), drawn_edges(p9, fixtures::p9_k33_edges()), false));

    auto c7 = build_TSk(cycle(7), 2);
    check_witness(c7.adj, is_planar(c7.adj));
    CHECK(oracle::is_kuratowski_subdivision(oracle::of(c7), drawn_edges(c7, fixtures::c7_k33_edges()), false));

    auto k5 = is_planar(complete(5).to_adjacency());
    check_witness(complete(5).to_adjacency(), k5);
    CHECK(k5.witness->type == KuratowskiType::K5);
    CHECK(is_planar(complete_bipartite(3, 3).to_adjacency()).witness->type == KuratowskiType::K33);
}

TEST_CASE("planarity agrees with exhaustive minor search") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            auto adj = g.to_adjacency();
            auto r = is_planar(adj);
            CHECK(r.planar == oracle::planar_by_minors(oracle::of(g)));
            CHECK(planar(adj) == r.planar);
            if (!r.planar) check_witness(adj, r);
        }
    std::mt19937_64 rng(5);
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 7 + t % 4;
        auto g = support::random_graph(rng, n, 0.25 + 0.05 * (t % 5));
        auto adj = g.to_adjacency();
        auto r = is_planar(adj);
        CHECK(r.planar == oracle::planar_by_minors(oracle::of(g)));
        if (!r.planar) check_witness(adj, r);
        if (n >= 3 && g.size() > 3 * n - 6) CHECK_FALSE(r.planar);
    }
}

TEST_CASE("planar reconfiguration graphs carry a verified embedding") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 60; ++t) {
        auto g = support::random_graph(rng, 4 + t % 6, 0.4);
        for (std::size_t k = 2; k <= 3; ++k) {
            auto ts = build_TSk(g, k);
            auto r = is_planar(ts.adj);
            CHECK(r.planar == oracle::planar_by_embedding(oracle::of(ts)));
            if (r.planar && ts.order() >= 3) CHECK(ts.size() <= 3 * ts.order() - 6);
            if (!r.planar) check_witness(ts.adj, r);
        }
    }
}

TEST_CASE("large girth forces non-planar TS") {
    for (const auto& g : {cycle(7), cycle(8), cycle(9), cycle_with_tail(7, 2), cycle_with_tail(8, 1)}) {
        REQUIRE(girth(g.to_adjacency()).value() >= 7);
        auto ts = build_TS(g);
        check_witness(ts.adj, is_planar(ts.adj));
    }
    // Acyclic graphs have infinite girth but small trees stay planar.
    Graph spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(girth(spider.to_adjacency()).is_infinite());
    CHECK(is_planar(build_TS(spider).adj).planar);
    // Girth 3: a path plus an apex vertex.
    auto apex = with_universal(path(9));
    CHECK(girth(apex.to_adjacency()) == Length::of(3));
    check_witness(build_TS(apex).adj, is_planar(build_TS(apex).adj));
}

TEST_CASE("cycles and trees under TS") {
    for (std::size_t n = 3; n <= 6; ++n) CHECK(is_planar(build_TS(cycle(n)).adj).planar);
    for (std::size_t n = 7; n <= 8; ++n) CHECK_FALSE(is_planar(build_TS(cycle(n)).adj).planar);
    for (const auto& t : enumerate_trees(7)) CHECK(planar(build_TS(t).adj));
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(cycle(5).to_adjacency()) == 3);
    CHECK(chromatic_number(AdjacencyList(0)) == 0);
    CHECK(chromatic_number(edgeless(3).to_adjacency()) == 1);
    for (std::size_t n = 1; n <= 7; ++n) CHECK(chromatic_number(complete(n).to_adjacency()) == n);
    CHECK(is_s_partite(cycle(6).to_adjacency(), 2));
    CHECK_FALSE(is_s_partite(cycle(7).to_adjacency(), 2));

    std::mt19937_64 rng(13);
    for (int t = 0; t < 120; ++t) {
        auto g = support::random_graph(rng, 1 + t % 10, 0.45);
        auto adj = g.to_adjacency();
        auto chi = chromatic_number(adj);
        CHECK(chi == oracle::chromatic(oracle::of(g)));
        for (std::size_t s = 1; s <= 4; ++s) CHECK(is_s_partite(adj, s) == (chi <= s));
        // Deleting edges never raises chi.
        Graph sub(g.order());
        for (auto e : g.edges())
            if (rng() % 2) sub.add_edge(e.first, e.second);
        CHECK(chromatic_number(sub.to_adjacency()) <= chi);
    }
}

TEST_CASE("TS preserves the chromatic number") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 80; ++t) {
        auto g = support::random_graph(rng, 1 + t % 6, 0.5);
        auto ts = build_TS(g);
        CHECK(chromatic_number(ts.adj) == chromatic_number(g.to_adjacency()));
        CHECK(chromatic_number(ts.adj) == oracle::chromatic(oracle::of(ts)));
    }
}

TEST_CASE("TS_k of a path is bipartite") {
    for (std::size_t n = 2; n <= 12; ++n)
        for (std::size_t k = 1; 2 * k <= n + 1; ++k) {
            auto ts = build_TSk(path(n), k);
            CHECK(oracle::colourable(oracle::of(ts), 2));
            CHECK(chromatic_number(ts.adj) == (ts.size() ? 2u : 1u));
        }
}

TEST_CASE("a universal vertex lowers chi of TS_k") {
    std::mt19937_64 rng(19);
    std::size_t checked = 0;
    for (int t = 0; t < 80; ++t) {
        auto g = with_universal(support::random_graph(rng, 3 + t % 6, 0.4));
        auto chi = chromatic_number(g.to_adjacency());
        for (std::size_t k = 2; k <= alpha(g); ++k) {
            CHECK(chromatic_number(build_TSk(g, k).adj) <= chi - 1);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("Eulerian") {
    CHECK_FALSE(is_eulerian(path(3).to_adjacency()));
    CHECK(is_eulerian(cycle(5).to_adjacency()));
    CHECK_FALSE(is_eulerian(disjoint_union(cycle(3), cycle(3)).to_adjacency()));
    CHECK(components_eulerian(disjoint_union(cycle(3), cycle(3)).to_adjacency()));

    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 2}, {7, 2}, {7, 3}, {9, 4}}) {
        auto ts = build_TSk(cycle(n), k);
        CHECK(is_eulerian(ts.adj));
        CHECK(oracle::eulerian(oracle::of(ts)));
    }

    std::mt19937_64 rng(29);
    for (int t = 0; t < 80; ++t) {
        auto g = support::random_graph(rng, 4 + t % 6, 0.4);
        auto ts = build_TSk(g, 2);
        CHECK(is_eulerian(ts.adj) == oracle::eulerian(oracle::of(ts)));
    }
}

TEST_CASE("components of TS_2 of an Eulerian graph are Eulerian") {
    std::size_t seen = 0;
    for (std::size_t n = 4; n <= 7; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            if (!oracle::eulerian(oracle::of(g))) continue;
            ++seen;
            auto ts = build_TSk(g, 2);
            CHECK(components_eulerian(ts.adj));
            auto m = oracle::of(ts);
            for (std::size_t v = 0; v < m.n; ++v) CHECK(m.degree(v) % 2 == 0);
        }
    CHECK(seen > 0);
}

TEST_CASE("TS_k of a triangle sharing a vertex with an odd cycle has a degree-3 node") {
    for (std::size_t l = 2; l <= 4; ++l) {
        const std::size_t len = 2 * l + 1, w = len, x = len + 1;
        auto g = add_isolated(cycle(len), 2);
        g.add_edge(0, w);
        g.add_edge(0, x);
        g.add_edge(w, x);
        CHECK(components_eulerian(build_TSk(g, 2).adj));
        for (std::size_t k = 3; k <= l + 1; ++k) {
            VertexSet i;
            i.insert(w);
            i.insert(len - 1);
            for (std::size_t j = 1; j <= k - 2; ++j) i.insert(2 * j - 1);
            auto ts = build_TSk(g, k);
            auto idx = ts.find(i);
            REQUIRE(idx);
            CHECK(ts.adj.degree(*idx) == 3);
            CHECK_FALSE(components_eulerian(ts.adj));
        }
    }
}

TEST_CASE("Eulerian graphs whose TS_k is not Eulerian") {
    Graph k4_pendant = add_isolated(complete(4), 1);
    k4_pendant.add_edge(0, 4);
    CHECK(oracle::isomorphic(oracle::of(build_TSk(k4_pendant, 2)), oracle::of(cycle(3))));

    for (std::size_t k = 3; k <= 5; ++k) {
        // Triangle 0-1-2 whose vertex 0 is also the end of the path 0-3-4, plus k-2 leaves on 0.
        Graph g = add_isolated(complete(3), 2 + (k - 2));
        g.add_edge(0, 3);
        g.add_edge(3, 4);
        for (std::size_t j = 0; j < k - 2; ++j) g.add_edge(0, 5 + j);
        CHECK_FALSE(oracle::eulerian(oracle::of(g)));
        CHECK(oracle::isomorphic(oracle::of(build_TSk(g, k)), oracle::of(cycle(4))));
    }
}

TEST_CASE("girth") {
    CHECK(girth(path(5).to_adjacency()).is_infinite());
    for (const auto& t : enumerate_trees(7)) CHECK(girth(t.to_adjacency()).is_infinite());
    CHECK(girth(complete(4).to_adjacency()) == Length::of(3));
    CHECK(girth(complete_bipartite(3, 3).to_adjacency()) == Length::of(4));

    // girth(TS_k(C_n)) is n when k = 1 or n = 2k+1; otherwise two distant tokens
    // slide independently and close a 4-cycle.
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 2}, {7, 3}, {9, 4}, {8, 1}})
        CHECK(girth(build_TSk(cycle(n), k).adj) == Length::of(n));
    for (std::size_t n = 3; n <= 11; ++n)
        for (std::size_t k = 1; 2 * k <= n; ++k) {
            auto ts = build_TSk(cycle(n), k);
            auto expect = oracle::girth(oracle::sliding_graph(oracle::of(cycle(n)), oracle::stable_sets(oracle::of(cycle(n)), k)));
            auto got = girth(ts.adj);
            CHECK(got.is_infinite() == (expect == 0));
            if (expect) CHECK(got.value() == expect);
            if (2 * k == n) CHECK(got.is_infinite());
        }
    auto c7 = build_TSk(cycle(7), 2);
    auto square = std::vector<std::string>{"14", "15", "25", "24"};
    for (std::size_t i = 0; i < 4; ++i) CHECK(oracle::of(c7).has(node_of(c7, square[i]), node_of(c7, square[(i + 1) % 4])));
    CHECK(girth(c7.adj) == Length::of(4));
    for (std::size_t k = 2; k <= 4; ++k)
        for (std::size_t n = 2 * k + 1; n <= 2 * k + 4; ++n) CHECK(girth(build_TSk(path(n), k).adj) == Length::of(4));

    std::mt19937_64 rng(37);
    for (int t = 0; t < 100; ++t) {
        auto g = support::random_graph(rng, 1 + t % 12, 0.2);
        auto got = girth(g.to_adjacency());
        auto expect = oracle::girth(oracle::of(g));
        CHECK(got.is_infinite() == (expect == 0));
        if (expect) CHECK(got.value() == expect);
    }
}

TEST_CASE("cliques") {
    CHECK(clique_number(complete_bipartite(3, 3).to_adjacency()) == 2);
    CHECK(clique_number(AdjacencyList(0)) == 0);
    CHECK(has_clique(complete(4).to_adjacency(), 4));
    CHECK_FALSE(has_clique(complete(4).to_adjacency(), 5));

    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            auto ts = build_TS(g);
            CHECK(has_clique(ts.adj, 3) == has_clique(g.to_adjacency(), 3));
            CHECK(clique_number(ts.adj) == oracle::clique_number(oracle::of(ts)));
        }

    // Split graph: clique {0,1,2}, stable {3,4} adjacent only to 0.
    Graph split(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}});
    CHECK(has_clique(split.to_adjacency(), 3));
    CHECK_FALSE(has_clique(build_TSk(split, 2).adj, 3));
    CHECK(oracle::clique_number(oracle::of(build_TSk(split, 2))) < 3);
}

TEST_CASE("connectivity and diameter") {
    for (std::size_t n = 2; n <= 10; ++n)
        for (std::size_t k = 1; 2 * k <= n + 1; ++k) CHECK(is_connected(build_TSk(path(n), k).adj));
    auto star_ts = build_TSk(star(3), 2);
    CHECK_FALSE(is_connected(star_ts.adj));
    CHECK(diameter(star_ts.adj).is_infinite());
    for (std::size_t n = 2; n <= 6; ++n) CHECK(diameter(complete(n).to_adjacency()) == Length::of(1));
    CHECK(diameter(complete(1).to_adjacency()) == Length::of(0));
    CHECK(diameter(path(6).to_adjacency()) == Length::of(5));

    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        auto g = support::random_graph(rng, 1 + t % 12, 0.25);
        auto adj = g.to_adjacency();
        auto m = oracle::of(g);
        auto d = oracle::diameter(m);
        CHECK(diameter(adj).is_infinite() == !d.has_value());
        if (d) CHECK(diameter(adj).value() == *d);
        CHECK(components(adj).size() == oracle::component_count(m));
        CHECK(is_connected(adj) == (oracle::component_count(m) <= 1));
    }
}

TEST_CASE("analyze and report JSON") {
    auto r = analyze(build_TSk(cycle(7), 2).adj);
    CHECK(r.order == 14);
    CHECK(r.size == oracle::of(build_TSk(cycle(7), 2)).edges());
    CHECK_FALSE(r.planarity.planar);
    CHECK(r.eulerian);
    CHECK(r.girth == Length::of(4));
    CHECK(r.component_count == 1);

    auto j = report_to_json(r);
    CHECK(j["planar"] == false);
    CHECK(j["witness"]["edges"].size() == r.planarity.witness->edges.size());
    CHECK(j["girth"] == 4);

    auto forest = report_to_json(analyze(disjoint_union(path(2), path(3)).to_adjacency()));
    CHECK(forest["girth"] == "infinite");
    CHECK(forest["diameter"] == "infinite");
    CHECK(forest["connected"] == false);
    CHECK(forest["component_count"] == 2);

    std::mt19937_64 rng(61);
    for (int t = 0; t < 40; ++t) {
        auto g = support::random_graph(rng, 1 + t % 9, 0.4);
        auto rep = analyze(g.to_adjacency());
        CHECK(rep.girth.is_infinite() == (oracle::girth(oracle::of(g)) == 0));
        if (rep.eulerian) CHECK(rep.connected);
        CHECK(rep.chromatic == oracle::chromatic(oracle::of(g)));
        CHECK(rep.clique_number == oracle::clique_number(oracle::of(g)));
    }
}

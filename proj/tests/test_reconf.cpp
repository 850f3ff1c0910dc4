#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "enumerate.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "props.hpp"
#include "reconf.hpp"
#include "stable_sets.hpp"
#include "support.hpp"

using namespace tokenslide;
using support::vs;

namespace {

/// Exact comparison with the oracle: same node order and same edge set.
void check_against_oracle(const LabeledGraph& lg, const oracle::Mat& g, const std::vector<std::uint64_t>& nodes,
                          const oracle::Mat& expected) {
    REQUIRE(support::masks(lg.labels) == nodes);
    auto got = oracle::of(lg);
    CHECK(got.a == expected.a);
}

std::set<std::string> label_strings(const LabeledGraph& lg) {
    std::set<std::string> out;
    for (const auto& l : lg.labels) out.insert(set_label(l));
    return out;
}

const Graph kFourExample = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}});

}  // namespace

TEST_CASE("TS_2 of the complement of the five-vertex example") {
    auto ts = build_TSk(complement(kFourExample), 2);
    CHECK(ts.order() == 6);
    CHECK(ts.size() == 6);
    CHECK(label_strings(ts) == std::set<std::string>{"12", "15", "23", "25", "34", "45"});
    CHECK(ts.kind == GraphKind::TSk);
    CHECK(ts.k == 2u);
}

TEST_CASE("TS_3(P_8) matches the drawn labels and edges") {
    auto ts = build_TSk(path(8), 3);
    REQUIRE(ts.order() == 20);
    CHECK(ts.size() == 30);
    auto labels = fixtures::p8_triples();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ts.order(); ++i) index[set_label(ts.labels[i])] = i;
    std::set<Edge> drawn;
    for (auto [a, b] : fixtures::p8_triple_edges()) {
        REQUIRE(index.count(labels[a]));
        REQUIRE(index.count(labels[b]));
        drawn.insert(std::minmax(index[labels[a]], index[labels[b]]));
    }
    auto edges = ts.adj.edges();
    CHECK(std::set<Edge>(edges.begin(), edges.end()) == drawn);
}

TEST_CASE("build_TSk equals the pairwise oracle") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 120; ++t) {
        std::size_t n = 1 + t % 10;
        auto g = support::random_graph(rng, n, 0.3);
        auto m = oracle::of(g);
        for (std::size_t k = 1; k <= 4; ++k) {
            auto nodes = oracle::stable_sets(m, k);
            check_against_oracle(build_TSk(g, k), m, nodes, oracle::sliding_graph(m, nodes));
        }
    }
}

TEST_CASE("build_TSk within a vertex subset") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 40; ++t) {
        auto g = support::random_graph(rng, 7, 0.35);
        auto keep = support::random_subset(rng, 7, 0.6);
        auto lg = build_TSk(g, 2, kDefaultNodeBudget, keep);
        auto sub = build_TSk(induced_subgraph(g, keep), 2);
        CHECK(lg.order() == sub.order());
        CHECK(lg.adj.edges() == sub.adj.edges());
        for (const auto& l : lg.labels) CHECK(l.is_subset_of(keep));
    }
}

TEST_CASE("build_TS") {
    auto k3 = build_TS(complete(3));
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);

    auto p4 = build_TS(path(4));
    auto m = oracle::of(path(4));
    auto nodes = oracle::all_stable_sets(m);
    check_against_oracle(p4, m, nodes, oracle::sliding_graph(m, nodes));
    CHECK(components(p4.adj).size() == 2);

    auto c4 = build_TS(cycle(4));
    auto layer2 = ts_layer(c4, 2);
    std::size_t isolated = 0;
    for (std::size_t v = 0; v < layer2.order(); ++v) isolated += layer2.adj.degree(v) == 0;
    CHECK(layer2.order() == 2);
    CHECK(isolated == 2);

    std::mt19937_64 rng(2);
    for (int t = 0; t < 40; ++t) {
        auto g = support::random_graph(rng, 1 + t % 9, 0.4);
        auto ts = build_TS(g);
        auto gm = oracle::of(g);
        auto all = oracle::all_stable_sets(gm);
        check_against_oracle(ts, gm, all, oracle::sliding_graph(gm, all));
        CHECK(ts.layer_offsets.size() == alpha(g) + 1);
        for (std::size_t s = 1; s <= alpha(g); ++s) {
            auto layer = ts_layer(ts, s);
            auto direct = build_TSk(g, s);
            CHECK(layer.labels == direct.labels);
            CHECK(layer.adj.edges() == direct.adj.edges());
        }
    }
}

TEST_CASE("build_Lk") {
    auto l2 = build_Lk(kFourExample, 2);
    CHECK(l2.order() == 6);
    CHECK(l2.size() == 9);
    auto k3 = build_Lk(complete(3), 2);
    CHECK(oracle::isomorphic(oracle::of(k3), oracle::of(complete(3))));
    CHECK(oracle::isomorphic(oracle::of(build_Lk(path(4), 2)), oracle::of(path(3))));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        auto g = support::random_graph(rng, 1 + t % 8, 0.5);
        auto m = oracle::of(g);
        for (std::size_t k = 1; k <= 3; ++k) {
            auto nodes = oracle::cliques(m, k);
            check_against_oracle(build_Lk(g, k), m, nodes, oracle::share_graph(nodes));
        }
    }
}

TEST_CASE("build_Fk") {
    auto f1 = build_Fk(kite(), 1);
    CHECK(oracle::isomorphic(oracle::of(f1), oracle::of(kite())));
    auto f2 = build_Fk(path(3), 2);
    CHECK(f2.order() == 3);
    CHECK(f2.size() == 2);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        auto g = support::random_graph(rng, 2 + t % 6, 0.5);
        auto m = oracle::of(g);
        for (std::size_t k = 1; k <= 3 && k <= g.order(); ++k) {
            auto fk = build_Fk(g, k);
            auto all = oracle::stable_sets(oracle::Mat(g.order()), k);
            check_against_oracle(fk, m, all, oracle::token_graph(m, all));
            // TS_k(G) is the subgraph of F_k(G) induced on the stable nodes.
            auto ts = build_TSk(g, k);
            std::vector<std::size_t> keep;
            for (const auto& l : ts.labels) keep.push_back(*fk.find(l));
            auto sub = induced_nodes(fk, keep);
            CHECK(sub.adj.edges() == ts.adj.edges());
        }
    }
}

TEST_CASE("complement law: TS_k of the complement versus L_k") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_graphs(n))
            for (std::size_t k = 2; k <= 3; ++k) {
                auto ts = build_TSk(complement(g), k);
                auto lk = build_Lk(g, k);
                REQUIRE(ts.labels == lk.labels);
                bool free = oracle::cliques(oracle::of(g), k + 1).empty();
                CHECK(oracle::subgraph_identity(oracle::of(ts), oracle::of(lk)));
                CHECK(oracle::isomorphic(oracle::of(ts), oracle::of(lk)) == free);
            }
}

TEST_CASE("induced-subgraph law") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
        auto g = support::random_graph(rng, 4 + t % 5, 0.4);
        auto keep = support::random_subset(rng, g.order(), 0.7);
        if (keep.empty()) continue;
        auto h = induced_subgraph(g, keep);
        auto elems = keep.elements();
        for (std::size_t k = 1; k <= 3; ++k) {
            auto big = build_TSk(g, k);
            auto small = build_TSk(h, k);
            std::vector<std::size_t> nodes;
            for (const auto& l : small.labels) {
                VertexSet lifted;
                l.for_each([&](std::size_t v) { lifted.insert(elems[v]); });
                auto idx = big.find(lifted);
                REQUIRE(idx);
                nodes.push_back(*idx);
            }
            CHECK(induced_nodes(big, nodes).adj.edges() == small.adj.edges());
        }
    }
}

TEST_CASE("padding law") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 40; ++t) {
        auto h = support::random_graph(rng, 2 + t % 6, 0.5);
        auto a = alpha(h);
        for (std::size_t k = a; k <= a + 2; ++k) {
            auto padded = build_TSk(add_isolated(h, k - a), k);
            auto base = build_TSk(h, a);
            CHECK(oracle::isomorphic(oracle::of(padded), oracle::of(base)));
        }
    }
}

TEST_CASE("TS_2 degree equals the count of legal single slides") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 60; ++t) {
        auto g = support::random_graph(rng, 3 + t % 7, 0.4);
        auto ts = build_TSk(g, 2);
        for (std::size_t i = 0; i < ts.order(); ++i) {
            auto e = ts.labels[i].elements();
            std::size_t slides = 0;
            for (std::size_t moving = 0; moving < 2; ++moving) {
                auto from = e[moving], stay = e[1 - moving];
                for (std::size_t to = 0; to < g.order(); ++to)
                    if (to != stay && g.adjacent(from, to) && !g.adjacent(to, stay)) ++slides;
            }
            CHECK(ts.adj.degree(i) == slides);
        }
    }
}

TEST_CASE("clique lifting") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n))
            for (std::size_t k = 2; k <= 3; ++k) {
                auto ts = build_TSk(g, k);
                auto w = clique_number(ts.adj);
                auto wg = clique_number(g.to_adjacency());
                CHECK(w <= std::max<std::size_t>(2, wg));
                if (w >= 3) CHECK(wg >= 3);
            }
}

TEST_CASE("JSON and DOT output") {
    auto ts = build_TS(path(3));
    auto j = labeled_to_json(ts);
    CHECK(j["kind"] == "TS");
    CHECK(j["nodes"].size() == 4);
    CHECK(j["layer_offsets"] == nlohmann::json::array({0, 3, 4}));
    auto dot = export_dot(build_TSk(path(8), 3));
    CHECK(dot.find("label=\"135\"") != std::string::npos);
    CHECK(dot.find("label=\"468\"") != std::string::npos);
}

TEST_CASE("builders enforce the node budget") {
    try {
        build_TSk(edgeless(20), 5, 100);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ExplosionCap);
    }
    CHECK_THROWS_AS(build_TS(edgeless(20), 100), Error);
    CHECK_THROWS_AS(build_Fk(complete(20), 5, 100), Error);
    CHECK_THROWS_AS(build_Lk(complete(20), 5, 100), Error);
}

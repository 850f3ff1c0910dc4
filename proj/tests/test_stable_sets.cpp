#include <doctest.h>

#include <algorithm>
#include <bit>

#include "enumerate.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "stable_sets.hpp"
#include "support.hpp"
#include "fixtures.hpp"

using namespace tokenslide;
using support::vs;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Every KS-partition with |K| = omega, by scanning all 2^n splits.
std::vector<std::uint64_t> brute_kmax_cliques(const Graph& g) {
    auto m = oracle::of(g);
    const auto w = oracle::clique_number(m);
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << g.order()); ++k) {
        if (static_cast<std::size_t>(std::popcount(k)) != w) continue;
        bool ok = true;
        for (std::size_t u = 0; u < g.order() && ok; ++u)
            for (std::size_t v = u + 1; v < g.order() && ok; ++v) {
                bool ku = (k >> u) & 1U, kv = (k >> v) & 1U;
                if (ku && kv) ok = m.has(u, v);
                if (!ku && !kv) ok = !m.has(u, v);
            }
        if (ok) out.push_back(k);
    }
    return out;
}

std::vector<std::uint64_t> sorted_masks(const std::vector<VertexSet>& sets) {
    auto out = support::masks(sets);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("is_independent and is_clique") {
    CHECK(is_independent(cycle(5), vs({0, 2})));
    CHECK_FALSE(is_independent(complete(3), vs({0, 1})));
    CHECK(is_independent(complete(3), {}));
    CHECK(is_clique(complete(4), vs({0, 1, 3})));
    CHECK_THROWS_AS(is_independent(path(3), vs({5})), Error);

    auto sg = edge_intersection_graph(fixtures::six_points());
    VertexSet s;
    for (std::size_t v = 0; v < sg.graph.order(); ++v) {
        const auto& name = sg.graph.names()[v];
        if (name == "15" || name == "35" || name == "36" || name == "56") s.insert(v);
    }
    REQUIRE(s.size() == 4);
    CHECK(is_independent(sg.graph, s));
}

TEST_CASE("independent_sets_of_size examples") {
    CHECK(independent_sets_of_size(path(8), 3).size() == 20);
    for (auto [n, k] : {std::pair<std::size_t, std::size_t>{5, 2}, {6, 2}, {7, 3}}) {
        auto fam = independent_sets_of_size(path(n), k);
        CHECK(fam.size() == binomial(n - k + 1, k));
        CHECK(fam.size() == oracle::stable_sets(oracle::of(path(n)), k).size());
    }
    CHECK(independent_sets_of_size(complete(4), 2).size() == 0);
    auto zero = independent_sets_of_size(path(3), 0);
    CHECK(zero.size() == 1);
    CHECK(zero.members[0].empty());
}

TEST_CASE("independent_sets_of_size equals the brute-force subset filter") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 150; ++t) {
        std::size_t n = 1 + t % 12;
        auto g = support::random_graph(rng, n, 0.35);
        for (std::size_t k = 0; k <= n; ++k) {
            auto fam = independent_sets_of_size(g, k);
            auto expect = oracle::stable_sets(oracle::of(g), k);
            // Both sides are in lexicographic order of element sequences.
            CHECK(support::masks(fam.members) == expect);
            CHECK(count_independent_sets_of_size(g, k) == expect.size());
            for (const auto& s : fam.members) CHECK(is_independent(g, s));
        }
    }
}

TEST_CASE("independent sets restricted to a vertex subset") {
    auto g = cycle(6);
    auto fam = independent_sets_of_size(g, 2, kDefaultNodeBudget, vs({0, 1, 2, 3}));
    // {0,2}, {0,3}, {1,3}
    CHECK(fam.size() == 3);
    for (const auto& s : fam.members) CHECK(s.is_subset_of(vs({0, 1, 2, 3})));
}

TEST_CASE("all_independent_sets") {
    CHECK(all_independent_sets(cycle(4)).size() == 6);
    CHECK(oracle::all_stable_sets(oracle::of(cycle(4))).size() == 6);
    CHECK(all_independent_sets(complete(5)).size() == 5);
    CHECK(all_independent_sets(edgeless(3)).size() == 7);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
        auto g = support::random_graph(rng, 1 + t % 10, 0.3);
        auto fam = all_independent_sets(g);
        auto expect = oracle::all_stable_sets(oracle::of(g));
        std::sort(expect.begin(), expect.end());
        CHECK(sorted_masks(fam.members) == expect);
        CHECK(std::is_sorted(fam.members.begin(), fam.members.end()));
    }
}

TEST_CASE("explosion cap") {
    try {
        all_independent_sets(edgeless(30), 1000);
        FAIL("cap not enforced");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ExplosionCap);
    }
    CHECK_THROWS_AS(independent_sets_of_size(edgeless(30), 10, 1000), Error);
}

TEST_CASE("alpha, omega and cliques") {
    auto sg = edge_intersection_graph(fixtures::six_points());
    CHECK(alpha(sg.graph) == 4);
    CHECK(alpha(cycle(7)) == 3);
    CHECK(omega(complete(5)) == 5);
    CHECK(omega(complete_bipartite(3, 3)) == 2);
    CHECK(alpha(Graph(0)) == 0);

    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        auto g = support::random_graph(rng, 1 + t % 11, 0.5);
        auto a = alpha(g);
        CHECK(omega(g) == alpha(complement(g)));
        CHECK(omega(g) == oracle::clique_number(oracle::of(g)));
        CHECK(independent_sets_of_size(g, a).size() >= 1);
        CHECK(independent_sets_of_size(g, a + 1).size() == 0);
        for (std::size_t k = 1; k <= 4; ++k)
            CHECK(support::masks(cliques_of_size(g, k)) == oracle::cliques(oracle::of(g), k));
    }
}

TEST_CASE("kmax_partition examples") {
    // Triangle plus a pendant.
    auto p = kmax_partition(paw());
    CHECK(p.clique == vs({0, 1, 2}));
    CHECK(p.stable == vs({3}));
    auto kn = kmax_partition(complete(4));
    CHECK(kn.clique == vs({0, 1, 2, 3}));
    CHECK(kn.stable.empty());
    try {
        kmax_partition(cycle(4));
        FAIL("C4 accepted as split");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSplit);
    }
    // The claw has three tied K-max partitions; the least clique is chosen.
    CHECK(kmax_partitions(claw()).size() == 3);
    CHECK(kmax_partition(claw()).clique == vs({0, 1}));
}

TEST_CASE("kmax partitions match exhaustive partition search") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            auto expect = brute_kmax_cliques(g);
            std::vector<std::uint64_t> got;
            for (const auto& part : kmax_partitions(g)) {
                got.push_back(support::mask(part.clique));
                CHECK(is_clique(g, part.clique));
                CHECK(is_independent(g, part.stable));
                CHECK((part.clique | part.stable) == g.vertices());
                CHECK_FALSE(part.clique.intersects(part.stable));
            }
            CHECK(got == expect);
            CHECK(is_split(g) == !expect.empty());
        }
}

TEST_CASE("tied K-max partitions agree on every stable-neighbour count bound") {
    // Ties swap a clique vertex with no stable neighbours for a stable vertex
    // adjacent to the rest of the clique; the per-k condition must not change.
    std::size_t tied = 0;
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            auto parts = kmax_partitions(g);
            if (parts.size() < 2) continue;
            ++tied;
            for (std::size_t k = 1; k <= 5; ++k) {
                auto holds = [&](const KSPartition& p) {
                    bool ok = true;
                    p.clique.for_each([&](std::size_t v) { ok = ok && (g.neighbors(v) & p.stable).size() <= k - 1; });
                    return ok;
                };
                for (const auto& p : parts) CHECK(holds(p) == holds(parts.front()));
            }
        }
    CHECK(tied > 0);
}

TEST_CASE("family JSON") {
    auto j = family_to_json(independent_sets_of_size(path(4), 2));
    CHECK(j.dump() == "[[0,2],[0,3],[1,3]]");
}

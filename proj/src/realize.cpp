#include "realize.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "canonical.hpp"
#include "enumerate.hpp"
#include "graph_io.hpp"
#include "reconf.hpp"

namespace tokenslide {
namespace {

void require_k(std::size_t k, std::size_t min) {
    if (k < min) fail(ErrorCode::InvalidArgument, "k must be at least " + std::to_string(min));
}

bool connected(const Graph& g) {
    if (g.order() == 0) return true;
    VertexSet seen = VertexSet::singleton(0), frontier = seen;
    while (!frontier.empty()) {
        frontier = g.neighborhood(frontier) - seen;
        seen |= frontier;
    }
    return seen.size() == g.order();
}

KSPartition checked_partition(const Graph& f) {
    if (!connected(f)) fail(ErrorCode::NotConnected, "split realizability needs a connected graph");
    return kmax_partition(f);
}

}  // namespace

Realization make_realization(const Graph& target, std::size_t k, const Graph& base,
                             std::optional<std::vector<std::size_t>> map) {
    auto ts = build_TSk(base, k);
    auto target_adj = target.to_adjacency();
    if (!map) map = find_isomorphism(ts.adj, target_adj);
    if (!map || !verify_isomorphism(ts.adj, target_adj, *map))
        fail(ErrorCode::Internal, "construction does not realize the target (k=" + std::to_string(k) + ")");
    return Realization{target, k, base, std::move(*map)};
}

Realization realize_complete(std::size_t n, std::size_t k) {
    require_k(k, 1);
    return make_realization(complete(n), k, add_isolated(complete(n), k - 1));
}

Realization realize_path(std::size_t n, std::size_t k) {
    require_k(k, 2);
    return make_realization(path(n), k, add_isolated(complement(path(n + 1)), k - 2));
}

Realization realize_cycle(std::size_t n, std::size_t k) {
    require_k(k, 2);
    if (n < 3) fail(ErrorCode::CycleTooSmall, "cycle needs n >= 3, got " + std::to_string(n));
    if (n == 3) return make_realization(cycle(3), k, add_isolated(complete(3), k - 1));
    return make_realization(cycle(n), k, add_isolated(complement(cycle(n)), k - 2));
}

Realization realize_star(std::size_t n, std::size_t k) {
    require_k(k, 2);
    if (n == 0) fail(ErrorCode::InvalidArgument, "star needs n >= 1");
    if (n > k) fail(ErrorCode::NExceedsK, "K_{1," + std::to_string(n) + "} needs n <= k=" + std::to_string(k));
    // a_i = i, b_i = k + i.
    Graph base(n + k);
    for (std::size_t i = 0; i < n; ++i) {
        base.add_edge(i, k + i);
        for (std::size_t j = i + 1; j < n; ++j) base.add_edge(k + i, k + j);
    }
    return make_realization(star(n), k, base);
}

bool split_realizable(const Graph& f, std::size_t k) {
    auto part = checked_partition(f);
    bool ok = true;
    part.clique.for_each([&](std::size_t v) { ok = ok && (f.neighbors(v) & part.stable).size() + 1 <= k; });
    part.stable.for_each([&](std::size_t w) { ok = ok && f.degree(w) == 1; });
    return ok;
}

Realization realize_split(const Graph& f, std::size_t k) {
    require_k(k, 2);
    auto part = checked_partition(f);
    part.stable.for_each([&](std::size_t w) {
        if (f.degree(w) != 1)
            fail(ErrorCode::ConditionViolated, "stable vertex " + std::to_string(w) + " has " +
                                                   std::to_string(f.degree(w)) + " neighbours, needs exactly 1");
    });
    const auto K = part.clique.elements();
    std::vector<std::vector<std::size_t>> hanging(K.size());
    for (std::size_t i = 0; i < K.size(); ++i) {
        hanging[i] = (f.neighbors(K[i]) & part.stable).elements();
        if (hanging[i].size() + 1 > k)
            fail(ErrorCode::ConditionViolated, "clique vertex " + std::to_string(K[i]) + " has " +
                                                   std::to_string(hanging[i].size()) + " stable neighbours, k-1=" +
                                                   std::to_string(k - 1));
    }

    // Layout: a_1..a_{k-1}, then x^i_j in (i, j) order, then b_1..b_m.
    const std::size_t m = K.size(), n = part.stable.size();
    const std::size_t x0 = k - 1, b0 = x0 + n;
    Graph base(b0 + m);
    std::vector<std::pair<std::size_t, std::size_t>> x_owner;  // (i, j) per x
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < hanging[i].size(); ++j) x_owner.emplace_back(i, j);
    for (std::size_t p = 0; p < n; ++p) {
        auto [i, j] = x_owner[p];
        base.add_edge(x0 + p, j);
        for (std::size_t q = p + 1; q < n; ++q) base.add_edge(x0 + p, x0 + q);
        for (std::size_t r = 0; r < m; ++r)
            if (r != i) base.add_edge(x0 + p, b0 + r);
    }
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = r + 1; s < m; ++s) base.add_edge(b0 + r, b0 + s);

    // f(v_i) = I + b_i, f(w^i_j) = I - a_j + x^i_j + b_i.
    auto ts = build_TSk(base, k);
    const VertexSet I = VertexSet::range(k - 1);
    std::vector<std::size_t> map(ts.order(), f.order());
    auto place = [&](const VertexSet& label, std::size_t v) {
        auto idx = ts.find(label);
        if (!idx) fail(ErrorCode::Internal, "split construction is missing node " + set_label(label));
        map[*idx] = v;
    };
    for (std::size_t p = 0, i = 0; i < m; ++i) {
        place(I | VertexSet::singleton(b0 + i), K[i]);
        for (std::size_t j = 0; j < hanging[i].size(); ++j, ++p) {
            VertexSet label = I;
            label.erase(j);
            label.insert(x0 + p);
            label.insert(b0 + i);
            place(label, hanging[i][j]);
        }
    }
    return make_realization(f, k, base, map);
}

Graph extend_with_vG(const Graph& g, const VertexSet& i) {
    if (!is_independent(g, i)) fail(ErrorCode::NotIndependent, "I = {" + set_label(i) + "} is not independent");
    const auto v = g.order();
    Graph out = add_isolated(g, 1);
    (g.vertices() - i).for_each([&](std::size_t w) { out.add_edge(w, v); });
    if (!g.names().empty()) {
        auto names = g.names();
        names.push_back("vG");
        out.set_names(std::move(names));
    }
    return out;
}

Realization realize_disjoint_union(std::span<const Realization> parts, std::size_t k) {
    if (parts.empty()) fail(ErrorCode::InvalidArgument, "disjoint union needs at least one part");
    std::vector<Graph> bases;
    Graph target(0);
    for (const auto& p : parts) {
        if (p.k != k)
            fail(ErrorCode::KMismatch, "part realizes k=" + std::to_string(p.k) + ", expected " + std::to_string(k));
        bases.push_back(p.base);
        target = disjoint_union(target, p.target);
    }
    return make_realization(target, k, complete_join(bases));
}

RealizerSearch search_realizer(const Graph& target, std::size_t k, std::size_t max_n, unsigned threads) {
    if (max_n > kMaxGraphOrder)
        fail(ErrorCode::NTooLarge, "search_realizer supports max_n <= " + std::to_string(kMaxGraphOrder));
    require_k(k, 1);
    RealizerSearch out;
    const auto want = canonical_form(target);
    const auto want_order = target.order();
    const auto want_size = target.size();
    threads = std::max(1U, threads);

    for (std::size_t n = std::max<std::size_t>(k, 1); n <= max_n; ++n) {
        const auto candidates = enumerate_graphs(n);
        std::atomic<std::size_t> next{0}, built{0};
        std::atomic<std::size_t> hit{candidates.size()};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < candidates.size();) {
                if (i > hit.load()) break;
                const auto& g = candidates[i];
                if (count_independent_sets_of_size(g, k) != want_order) continue;
                auto ts = build_TSk(g, k);
                ++built;
                if (ts.size() != want_size || canonical_form(ts.adj) != want) continue;
                auto cur = hit.load();
                while (i < cur && !hit.compare_exchange_weak(cur, i)) {
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
        out.candidates_built += built.load();
        if (hit.load() < candidates.size()) {
            out.found = make_realization(target, k, candidates[hit.load()]);
            return out;
        }
        out.none_up_to = n;
    }
    out.none_up_to = max_n;
    return out;
}

nlohmann::json realization_to_json(const Realization& r) {
    nlohmann::json j;
    j["target"] = graph_to_json(r.target);
    j["k"] = r.k;
    j["base"] = graph_to_json(r.base);
    j["base_graph6"] = write_graph6(r.base);
    auto ts = build_TSk(r.base, r.k);
    auto nodes = nlohmann::json::array();
    for (const auto& l : ts.labels) nodes.push_back(l.elements());
    j["nodes"] = std::move(nodes);
    j["witness_iso"] = r.witness_iso;
    return j;
}

}  // namespace tokenslide

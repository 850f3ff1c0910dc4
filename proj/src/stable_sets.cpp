#include "stable_sets.hpp"

#include <algorithm>

namespace tokenslide {
namespace {

void require_subset(const Graph& g, const VertexSet& s) {
    if (!is_subset_of_vertices(g, s)) fail(ErrorCode::SubsetViolation, "vertex set is not within V(G)");
}

[[noreturn]] void explode(std::size_t budget) {
    fail(ErrorCode::ExplosionCap, "stable-set enumeration exceeded node budget of " + std::to_string(budget));
}

// Branches on the lowest candidate; emits in lexicographic order.
class SizedEnumerator {
public:
    SizedEnumerator(const Graph& g, std::size_t k, std::size_t budget, std::vector<VertexSet>& out)
        : g_(g), k_(k), budget_(budget), out_(out) {}

    void run(const VertexSet& candidates) { recurse(VertexSet{}, candidates, 0); }

private:
    void recurse(const VertexSet& chosen, VertexSet cands, std::size_t depth) {
        if (depth == k_) {
            if (out_.size() >= budget_) explode(budget_);
            out_.push_back(chosen);
            return;
        }
        while (!cands.empty() && cands.size() >= k_ - depth) {
            auto v = cands.first();
            cands.erase(v);
            VertexSet next = chosen;
            next.insert(v);
            recurse(next, cands - g_.neighbors(v), depth + 1);
        }
    }

    const Graph& g_;
    std::size_t k_;
    std::size_t budget_;
    std::vector<VertexSet>& out_;
};

std::size_t count_sized(const Graph& g, VertexSet cands, std::size_t need) {
    if (need == 0) return 1;
    std::size_t total = 0;
    while (cands.size() >= need) {
        auto v = cands.first();
        cands.erase(v);
        total += count_sized(g, cands - g.neighbors(v), need - 1);
    }
    return total;
}

void all_sets(const Graph& g, const VertexSet& chosen, VertexSet cands, std::size_t budget,
              std::vector<VertexSet>& out) {
    while (!cands.empty()) {
        auto v = cands.first();
        cands.erase(v);
        VertexSet next = chosen;
        next.insert(v);
        if (out.size() >= budget) explode(budget);
        out.push_back(next);
        all_sets(g, next, cands - g.neighbors(v), budget, out);
    }
}

void max_independent(const Graph& g, std::size_t current, VertexSet cands, std::size_t& best) {
    if (cands.empty()) {
        best = std::max(best, current);
        return;
    }
    if (current + cands.size() <= best) return;
    auto v = cands.first();
    cands.erase(v);
    max_independent(g, current + 1, cands - g.neighbors(v), best);
    // Skipping v only helps if v has a neighbour among the candidates.
    if (g.neighbors(v).intersects(cands)) max_independent(g, current, cands, best);
}

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
    require_subset(g, s);
    bool ok = true;
    s.for_each([&](std::size_t v) { ok = ok && !g.neighbors(v).intersects(s); });
    return ok;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    require_subset(g, s);
    bool ok = true;
    s.for_each([&](std::size_t v) {
        VertexSet others = s;
        others.erase(v);
        ok = ok && others.is_subset_of(g.neighbors(v));
    });
    return ok;
}

StableSetFamily independent_sets_of_size(const Graph& g, std::size_t k, std::size_t budget,
                                         std::optional<VertexSet> within) {
    StableSetFamily f;
    f.host_order = g.order();
    f.k = k;
    VertexSet cands = within.value_or(g.vertices());
    require_subset(g, cands);
    if (k == 0) {
        f.members.push_back(VertexSet{});
        return f;
    }
    SizedEnumerator(g, k, budget, f.members).run(cands);
    return f;
}

std::size_t count_independent_sets_of_size(const Graph& g, std::size_t k) {
    return count_sized(g, g.vertices(), k);
}

StableSetFamily all_independent_sets(const Graph& g, std::size_t budget) {
    StableSetFamily f;
    f.host_order = g.order();
    all_sets(g, VertexSet{}, g.vertices(), budget, f.members);
    return f;
}

std::size_t alpha(const Graph& g) {
    std::size_t best = 0;
    max_independent(g, 0, g.vertices(), best);
    return best;
}

std::size_t omega(const Graph& g) { return alpha(complement(g)); }

std::vector<VertexSet> cliques_of_size(const Graph& g, std::size_t k, std::size_t budget) {
    return independent_sets_of_size(complement(g), k, budget).members;
}

std::vector<KSPartition> kmax_partitions(const Graph& g) {
    std::vector<KSPartition> out;
    if (g.order() == 0) {
        out.push_back({});
        return out;
    }
    const auto all = g.vertices();
    for (const auto& k : cliques_of_size(g, omega(g))) {
        auto rest = all - k;
        if (is_independent(g, rest)) out.push_back({k, rest});
    }
    return out;
}

bool is_split(const Graph& g) { return !kmax_partitions(g).empty(); }

KSPartition kmax_partition(const Graph& g) {
    auto parts = kmax_partitions(g);
    if (parts.empty()) fail(ErrorCode::NotSplit, "graph is not split: no maximum clique leaves an independent remainder");
    return parts.front();
}

nlohmann::json family_to_json(const StableSetFamily& f) {
    auto j = nlohmann::json::array();
    for (const auto& s : f.members) j.push_back(s.elements());
    return j;
}

}  // namespace tokenslide

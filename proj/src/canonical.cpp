#include "canonical.hpp"

#include <algorithm>
#include <numeric>

namespace tokenslide {
namespace {

using Colors = std::vector<std::uint32_t>;

/// Reassigns colours as dense ranks of keys; key order is label independent.
template <typename Key>
std::size_t rerank(const std::vector<Key>& keys, Colors& colors) {
    std::vector<std::uint32_t> idx(keys.size());
    std::iota(idx.begin(), idx.end(), 0U);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && keys[idx[i - 1]] < keys[idx[i]]) ++c;
        colors[idx[i]] = c;
    }
    return idx.empty() ? 0 : c + 1;
}

std::size_t count_colors(const Colors& colors) {
    std::uint32_t mx = 0;
    for (auto c : colors) mx = std::max(mx, c);
    return colors.empty() ? 0 : mx + 1;
}

/// Iterated 1-WL refinement to an equitable partition.
void refine(const AdjacencyList& g, Colors& colors) {
    const auto n = g.order();
    std::size_t cells = count_colors(colors);
    std::vector<std::vector<std::uint32_t>> keys(n);
    while (true) {
        for (std::size_t v = 0; v < n; ++v) {
            auto& k = keys[v];
            k.clear();
            k.push_back(colors[v]);
            for (auto w : g.neighbors(v)) k.push_back(colors[w]);
            std::sort(k.begin() + 1, k.end());
        }
        auto next = rerank(keys, colors);
        if (next == cells) return;
        cells = next;
    }
}

class Searcher {
public:
    Searcher(const AdjacencyList& g, std::size_t budget) : g_(g), budget_(budget), n_(g.order()) {}

    CanonicalLabeling run() {
        Colors colors(n_);
        std::vector<std::size_t> deg(n_);
        for (std::size_t v = 0; v < n_; ++v) deg[v] = g_.degree(v);
        rerank(deg, colors);
        refine(g_, colors);
        std::vector<std::size_t> prefix;
        search(colors, prefix);
        CanonicalLabeling out;
        out.form.order = n_;
        out.form.edges = best_cert_;
        out.position.assign(best_pos_.begin(), best_pos_.end());
        return out;
    }

private:
    using Cert = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

    Cert certificate(const Colors& pos) const {
        Cert c;
        c.reserve(g_.size());
        for (std::size_t u = 0; u < n_; ++u)
            for (auto w : g_.neighbors(u))
                if (u < w) {
                    auto a = pos[u], b = pos[w];
                    c.emplace_back(std::min(a, b), std::max(a, b));
                }
        std::sort(c.begin(), c.end());
        return c;
    }

    // Returns the depth to unwind to; npos means keep going.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t search(const Colors& colors, std::vector<std::size_t>& prefix) {
        if (++visited_ > budget_)
            fail(ErrorCode::TooLargeForIso, "isomorphism search exceeded node budget of " + std::to_string(budget_));

        // Target cell: lowest-coloured non-singleton cell.
        const auto cells = count_colors(colors);
        std::vector<std::size_t> cell_size(cells, 0);
        for (auto c : colors) ++cell_size[c];
        std::uint32_t target = 0;
        bool discrete = true;
        for (std::uint32_t c = 0; c < cells; ++c)
            if (cell_size[c] > 1) {
                target = c;
                discrete = false;
                break;
            }

        if (discrete) return leaf(colors, prefix);

        std::vector<std::size_t> members;
        for (std::size_t v = 0; v < n_; ++v)
            if (colors[v] == target) members.push_back(v);

        std::vector<std::size_t> explored;
        for (auto v : members) {
            if (in_explored_orbit(v, explored, prefix)) continue;
            explored.push_back(v);

            Colors child(n_);
            std::vector<std::pair<std::uint32_t, std::uint32_t>> keys(n_);
            for (std::size_t u = 0; u < n_; ++u) keys[u] = {colors[u], (colors[u] == target && u != v) ? 1U : 0U};
            rerank(keys, child);
            refine(g_, child);

            prefix.push_back(v);
            auto unwind = search(child, prefix);
            prefix.pop_back();
            if (unwind != npos && unwind < prefix.size()) return unwind;
        }
        return npos;
    }

    std::size_t leaf(const Colors& pos, const std::vector<std::size_t>& prefix) {
        auto cert = certificate(pos);
        if (!have_first_) {
            have_first_ = true;
            first_path_ = prefix;
            first_pos_ = pos;
            first_cert_ = cert;
            best_cert_ = cert;
            best_pos_ = pos;
            return npos;
        }
        if (cert < best_cert_) {
            best_cert_ = cert;
            best_pos_ = pos;
        }
        if (cert != first_cert_) return npos;

        // gamma maps the vertex at position p in the first leaf to the vertex
        // at position p in this leaf.
        std::vector<std::size_t> at(n_);
        for (std::size_t v = 0; v < n_; ++v) at[pos[v]] = v;
        std::vector<std::size_t> gamma(n_);
        for (std::size_t v = 0; v < n_; ++v) gamma[v] = at[first_pos_[v]];
        generators_.push_back(gamma);

        std::size_t diverge = 0;
        while (diverge < prefix.size() && diverge < first_path_.size() && prefix[diverge] == first_path_[diverge])
            ++diverge;
        if (diverge >= prefix.size() || diverge >= first_path_.size()) return npos;
        for (std::size_t j = 0; j <= diverge; ++j)
            if (gamma[first_path_[j]] != prefix[j]) return npos;
        // The subtree below prefix[0..diverge] is the gamma-image of one
        // already searched; resume at the frame holding depth diverge.
        return diverge;
    }

    bool in_explored_orbit(std::size_t v, const std::vector<std::size_t>& explored,
                           const std::vector<std::size_t>& prefix) const {
        if (explored.empty() || generators_.empty()) return false;
        std::vector<std::size_t> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool any = false;
        for (const auto& gamma : generators_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](auto p) { return gamma[p] == p; });
            if (!fixes) continue;
            any = true;
            for (std::size_t x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
        }
        if (!any) return false;
        auto rv = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](auto e) { return find(e) == rv; });
    }

    const AdjacencyList& g_;
    std::size_t budget_;
    std::size_t n_;
    std::size_t visited_ = 0;

    bool have_first_ = false;
    std::vector<std::size_t> first_path_;
    Colors first_pos_;
    Cert first_cert_;
    Cert best_cert_;
    Colors best_pos_;
    std::vector<std::vector<std::size_t>> generators_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const AdjacencyList& g, std::size_t budget) {
    return Searcher(g, budget).run();
}

CanonicalForm canonical_form(const AdjacencyList& g, std::size_t budget) {
    return canonical_labeling(g, budget).form;
}

CanonicalForm canonical_form(const Graph& g, std::size_t budget) { return canonical_form(g.to_adjacency(), budget); }

bool is_isomorphic(const AdjacencyList& a, const AdjacencyList& b, std::size_t budget) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    return canonical_form(a, budget) == canonical_form(b, budget);
}

bool is_isomorphic(const Graph& a, const Graph& b, std::size_t budget) {
    return is_isomorphic(a.to_adjacency(), b.to_adjacency(), budget);
}

std::optional<std::vector<std::size_t>> find_isomorphism(const AdjacencyList& a, const AdjacencyList& b,
                                                         std::size_t budget) {
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    auto la = canonical_labeling(a, budget);
    auto lb = canonical_labeling(b, budget);
    if (la.form != lb.form) return std::nullopt;
    std::vector<std::size_t> at_b(b.order());
    for (std::size_t v = 0; v < b.order(); ++v) at_b[lb.position[v]] = v;
    std::vector<std::size_t> f(a.order());
    for (std::size_t v = 0; v < a.order(); ++v) f[v] = at_b[la.position[v]];
    return f;
}

bool verify_isomorphism(const AdjacencyList& a, const AdjacencyList& b, const std::vector<std::size_t>& f) {
    if (a.order() != b.order() || a.size() != b.size() || f.size() != a.order()) return false;
    std::vector<bool> hit(b.order(), false);
    for (auto x : f) {
        if (x >= b.order() || hit[x]) return false;
        hit[x] = true;
    }
    for (auto [u, v] : a.edges())
        if (!b.has_edge(f[u], f[v])) return false;
    return true;
}

Graph canonical_graph(const Graph& g) {
    auto lab = canonical_labeling(g.to_adjacency());
    return relabel(g, lab.position);
}

}  // namespace tokenslide

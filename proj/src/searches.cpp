#include "searches.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "enumerate.hpp"
#include "graph_io.hpp"
#include "props.hpp"
#include "reconf.hpp"

namespace tokenslide {
namespace {

struct Item {
    std::string label;
    Graph base;
};

SearchVerdict check_ts_planarity(const Item& item) {
    auto ts = build_TS(item.base);
    auto result = is_planar(ts.adj);
    SearchVerdict v;
    v.label = item.label;
    v.graph6 = write_graph6(item.base);
    v.ts_order = ts.order();
    v.ts_size = ts.size();
    v.planar = result.planar;
    if (result.witness) v.witness = result.witness->type == KuratowskiType::K5 ? "K5" : "K33";
    return v;
}

/// Evaluates every item; results keep item order whatever the thread count.
std::vector<SearchVerdict> evaluate(const std::vector<Item>& items, unsigned threads) {
    std::vector<SearchVerdict> out(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) out[i] = check_ts_planarity(items[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1U, threads); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

std::vector<Item> numbered(const std::vector<Graph>& graphs, const std::string& prefix) {
    std::vector<Item> items;
    for (std::size_t i = 0; i < graphs.size(); ++i) items.push_back({prefix + "#" + std::to_string(i + 1), graphs[i]});
    return items;
}

}  // namespace

std::vector<std::string> search_names() { return {"trees7", "trees8", "planar6", "cycles-planarity"}; }

SearchReport run_search(const std::string& name, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    SearchReport r;
    r.name = name;
    std::vector<Item> items;
    if (name == "trees7" || name == "trees8") {
        auto n = static_cast<std::size_t>(name.back() - '0');
        items = numbered(enumerate_trees(n), "tree" + std::to_string(n));
    } else if (name == "planar6") {
        auto connected = enumerate_connected_graphs(6);
        std::vector<Graph> planar_bases;
        for (const auto& g : connected)
            if (planar(g.to_adjacency())) planar_bases.push_back(g);
        r.summary["connected"] = connected.size();
        r.summary["planar_bases"] = planar_bases.size();
        items = numbered(planar_bases, "planar6");
    } else if (name == "cycles-planarity") {
        for (std::size_t n = 3; n <= 8; ++n) items.push_back({"C" + std::to_string(n), cycle(n)});
    } else {
        fail(ErrorCode::UnknownSearch, "unknown search '" + name + "'");
    }
    r.verdicts = evaluate(items, threads);
    r.summary["planar"] = 0;
    r.summary["nonplanar"] = 0;
    for (const auto& v : r.verdicts) ++r.summary[v.planar ? "planar" : "nonplanar"];
    r.summary["total"] = r.verdicts.size();
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

nlohmann::json search_to_json(const SearchReport& r, bool timing) {
    nlohmann::json j;
    j["search"] = r.name;
    auto verdicts = nlohmann::json::array();
    for (const auto& v : r.verdicts) {
        nlohmann::json vj;
        vj["label"] = v.label;
        vj["graph6"] = v.graph6;
        vj["ts_order"] = v.ts_order;
        vj["ts_size"] = v.ts_size;
        vj["planar"] = v.planar;
        vj["witness"] = v.witness.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.witness);
        verdicts.push_back(std::move(vj));
    }
    j["verdicts"] = std::move(verdicts);
    j["summary"] = r.summary;
    if (timing) j["wall_seconds"] = r.wall_seconds;
    return j;
}

}  // namespace tokenslide

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graph.hpp"

namespace tokenslide {

/// One base graph checked by a named search.
struct SearchVerdict {
    std::string label;
    std::string graph6;
    std::size_t ts_order = 0;
    std::size_t ts_size = 0;
    bool planar = true;
    /// "K5" or "K33" when non-planar.
    std::string witness;
};

struct SearchReport {
    std::string name;
    std::vector<SearchVerdict> verdicts;
    /// Tallies of verdicts ("planar", "nonplanar") plus search-specific counts.
    std::map<std::string, std::size_t> summary;
    double wall_seconds = 0;
};

std::vector<std::string> search_names();

/// trees7, trees8, planar6 or cycles-planarity. Throws UnknownSearch.
/// Output is independent of threads.
SearchReport run_search(const std::string& name, unsigned threads = 1);

/// Wall time is included only when timing is set, so reports are reproducible.
nlohmann::json search_to_json(const SearchReport& r, bool timing = false);

}  // namespace tokenslide

#include "vertex_set.hpp"

namespace tokenslide {

std::string set_label(const VertexSet& s, const std::vector<std::string>* names) {
    const bool use_names = names && !names->empty();
    bool separate = s.last() != kMaxVertices && s.last() >= 9;
    if (use_names)
        s.for_each([&](std::size_t v) { separate = separate || (*names)[v].size() != 1; });
    std::string out;
    s.for_each([&](std::size_t v) {
        if (separate && !out.empty()) out.push_back(',');
        out += use_names ? (*names)[v] : std::to_string(v + 1);
    });
    return out;
}

}  // namespace tokenslide

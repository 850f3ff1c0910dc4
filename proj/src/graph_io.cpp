#include "graph_io.hpp"

#include <sstream>

namespace tokenslide {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void malformed(const std::string& why) { fail(ErrorCode::MalformedGraph6, "malformed graph6: " + why); }

int sixbits(char c) {
    int v = static_cast<unsigned char>(c) - kBias;
    if (v < 0 || v > 63) malformed(std::string("byte '") + c + "' outside 63..126");
    return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) malformed("empty input");
    if (text.front() == ':' || text.front() == '&') malformed("sparse6/digraph6 input is not graph6");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (text[0] != '~') {
        n = static_cast<std::size_t>(sixbits(text[0]));
        pos = 1;
    } else {
        if (text.size() < 4) malformed("truncated size prefix");
        if (text[1] == '~') malformed("8-byte size prefix not supported");
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sixbits(text[i]));
        pos = 4;
    }

    const std::size_t bits = n * (n - (n ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes) {
        std::ostringstream os;
        os << "expected " << bytes << " data bytes for n=" << n << ", got " << (text.size() - pos);
        malformed(os.str());
    }

    Graph g(n);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            int byte = sixbits(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    // Padding bits must be zero.
    for (; k < bytes * 6; ++k)
        if ((sixbits(text[pos + k / 6]) >> (5 - k % 6)) & 1) malformed("non-zero padding bits");
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    const auto n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0, nbits = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = nbits = 0;
            }
        }
    if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
    std::vector<Graph> out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
        if (!line.empty()) out.push_back(parse_graph6(line));
        start = end + 1;
    }
    return out;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["names"] = g.names();
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("n")) fail(ErrorCode::MalformedInput, "graph JSON needs an object with \"n\"");
        auto n = j.at("n").get<std::size_t>();
        std::vector<Edge> edges;
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                if (!e.is_array() || e.size() != 2) fail(ErrorCode::MalformedInput, "edge must be a pair");
                edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
            }
        Graph g(n, edges);
        if (j.contains("names")) g.set_names(j.at("names").get<std::vector<std::string>>());
        return g;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::MalformedInput, std::string("graph JSON: ") + e.what());
    }
}

std::string export_dot(const Graph& g, std::string_view name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.order(); ++v) {
        os << "  " << v << " [label=\"";
        if (!g.names().empty())
            os << g.names()[v];
        else
            os << v + 1;
        os << "\"];\n";
    }
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace tokenslide

#pragma once

// Hand-built fixtures, each pinned by the properties the tests check.

#include <string>
#include <utility>
#include <vector>

#include "decompose.hpp"
#include "geometry.hpp"
#include "graph.hpp"

namespace fixtures {

/// Reconstructed six-point set. Hull-only segments (1-based) are
/// 12 14 16 23 26 34 45; the crossing segments form an 8-vertex graph.
inline tokenslide::PointSet six_points() { return {{0, 0}, {2, 8}, {8, 7}, {9, 4}, {6, 5}, {2, 5}}; }

inline std::vector<std::string> six_points_fixed() { return {"12", "14", "16", "23", "26", "34", "45"}; }

/// Reconstructed join instance: G1 a star centred at 0 on 4 vertices,
/// G2 on 5 vertices, H1 = the three leaves, H2 = {0, 1}, k = 3.
inline tokenslide::JoinSpec join_instance() {
    using tokenslide::Graph;
    tokenslide::JoinSpec spec;
    spec.g1 = Graph(4, {{0, 1}, {0, 2}, {0, 3}});
    spec.g2 = Graph(5, {{0, 3}, {3, 4}, {2, 4}, {1, 2}, {0, 2}, {1, 3}});
    spec.h1.insert(1);
    spec.h1.insert(2);
    spec.h1.insert(3);
    spec.h2.insert(0);
    spec.h2.insert(1);
    spec.k = 3;
    return spec;
}

/// 1-based labels of the twenty stable triples of P_8.
inline std::vector<std::string> p8_triples() {
    return {"135", "136", "137", "138", "146", "147", "148", "157", "158", "168",
            "246", "247", "248", "257", "258", "268", "357", "358", "368", "468"};
}

/// Edges of the planar drawing of TS_3(P_8), as indices into p8_triples().
inline std::vector<tokenslide::Edge> p8_triple_edges() {
    return {{0, 1},   {1, 2},   {1, 4},   {2, 3},   {2, 5},   {3, 6},   {4, 5},   {4, 10},  {5, 6},   {5, 7},
            {5, 11},  {6, 8},   {6, 12},  {7, 8},   {7, 13},  {8, 9},   {8, 14},  {9, 15},  {10, 11}, {11, 12},
            {11, 13}, {12, 14}, {13, 14}, {13, 16}, {14, 15}, {14, 17}, {15, 18}, {16, 17}, {17, 18}, {18, 19}};
}

/// K3,3 subdivision drawn inside TS_3(P_9), as pairs of 1-based labels.
inline std::vector<std::pair<std::string, std::string>> p9_k33_edges() {
    return {{"249", "259"}, {"259", "359"}, {"259", "269"}, {"359", "369"}, {"369", "269"}, {"269", "268"},
            {"359", "358"}, {"358", "368"}, {"368", "268"}, {"249", "248"}, {"248", "258"}, {"258", "257"},
            {"257", "157"}, {"157", "158"}, {"158", "168"}, {"168", "268"}, {"249", "149"}, {"149", "159"},
            {"159", "169"}, {"169", "179"}, {"179", "279"}, {"279", "379"}, {"379", "479"}, {"479", "469"},
            {"469", "369"}};
}

/// K3,3 subdivision drawn inside TS_2(C_7), as pairs of 1-based labels.
inline std::vector<std::pair<std::string, std::string>> c7_k33_edges() {
    return {{"74", "73"}, {"52", "51"}, {"62", "63"}, {"73", "31"}, {"31", "41"}, {"41", "42"},
            {"42", "52"}, {"73", "72"}, {"72", "62"}, {"63", "53"}, {"53", "52"}, {"63", "64"},
            {"64", "74"}, {"51", "75"}, {"75", "74"}, {"51", "61"}, {"61", "62"}};
}

}  // namespace fixtures

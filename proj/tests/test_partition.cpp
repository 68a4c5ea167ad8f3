#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "recolor/coloring_graph.hpp"
#include "recolor/families.hpp"
#include "recolor/graph.hpp"
#include "recolor/link_detect.hpp"
#include "recolor/partition_extract.hpp"

using namespace recolor;

namespace {

int vid(const LabeledColoringGraph& lcg, const std::string& s) {
    for (size_t i = 0; i < lcg.phi.size(); i++)
        if (coloring_to_string(lcg.phi[i]) == s) return static_cast<int>(i);
    REQUIRE(false);
    return -1;
}

// base vertex recolored by the moves of clique `c` at `alpha`
int base_of_clique(const LabeledColoringGraph& lcg, const LinkReport& rep, int alpha, int c) {
    const auto& dec = rep.per_alpha.at(alpha).dec;
    const auto& mine = lcg.phi[static_cast<size_t>(dec.cliques[c][0])].values;
    const auto& home = lcg.phi[static_cast<size_t>(alpha)].values;
    for (int v = 0; v < lcg.base.n; v++)
        if (mine[v] != home[v]) return v;
    REQUIRE(false);
    return -1;
}

std::string at(const LabeledColoringGraph& lcg, int id) {
    return coloring_to_string(lcg.phi[static_cast<size_t>(id)]);
}

} // namespace

TEST_CASE("[partition] path coloring graph splits ends from middle") {
    LabeledColoringGraph lcg = build_coloring_graph(named_graph("P3"), 3);
    auto result = reconstruct_base(lcg.skeleton);
    auto& rep = std::get<LinkReport>(result);
    int alpha = vid(lcg, "121");

    PartitionExtraction pe = extract_partition(lcg.skeleton, rep, alpha);
    CHECK(pe.alpha == alpha);
    REQUIRE(pe.components.size() == 1);
    const ComponentPartition& cp = pe.components[0];
    CHECK(cp.cliques == std::vector<int>{0, 1, 2});
    REQUIRE(cp.parts.size() == 2); // chromatic number of the path

    // parts carry the base color classes: {u, w} then {v}
    std::set<std::set<int>> got;
    for (const auto& p : cp.parts) {
        std::set<int> bases;
        for (int c : p) bases.insert(base_of_clique(lcg, rep, alpha, c));
        got.insert(bases);
    }
    CHECK(got == std::set<std::set<int>>{{0, 2}, {1}});

    // a part's antipode recolors the whole part to the free color
    REQUIRE(cp.part_antipodes.size() == 2);
    REQUIRE(cp.part_antipodes[0].size() == 1); // one selection
    CHECK(at(lcg, cp.part_antipodes[0][0]) == "323");
    CHECK(at(lcg, cp.part_antipodes[1][0]) == "131");

    const PartitionDiagnostics& d = pe.diagnostics;
    CHECK(d.candidates == 1);
    CHECK(d.pruned_adjacent == 2);
    CHECK(d.pruned_cube == 0);
    CHECK(d.pruned_antipode_absent == 0);
    CHECK(d.pruned_antipode_moves == 0);
}

TEST_CASE("[partition] paw coloring graph groups the repeated color") {
    // pendant vertex 0 hangs off the triangle 1,2,3
    LabeledColoringGraph lcg = build_coloring_graph(named_graph("paw"), 4);
    auto result = reconstruct_base(lcg.skeleton);
    auto& rep = std::get<LinkReport>(result);
    CHECK(rep.A.size() == 48);
    int alpha = vid(lcg, "1231");

    PartitionExtraction pe = extract_partition(lcg.skeleton, rep, alpha);
    REQUIRE(pe.components.size() == 1);
    const ComponentPartition& cp = pe.components[0];
    REQUIRE(cp.parts.size() == 3);

    std::set<std::set<int>> got;
    for (const auto& p : cp.parts) {
        std::set<int> bases;
        for (int c : p) bases.insert(base_of_clique(lcg, rep, alpha, c));
        got.insert(bases);
    }
    CHECK(got == std::set<std::set<int>>{{0, 3}, {1}, {2}});

    // whole-part recolorings to the free color 4
    std::set<std::string> antipodes;
    for (const auto& pa : cp.part_antipodes) {
        REQUIRE(pa.size() == 1);
        antipodes.insert(at(lcg, pa[0]));
    }
    CHECK(antipodes == std::set<std::string>{"4234", "1431", "1241"});

    // two candidates reach the antipode stage; one dies there
    const PartitionDiagnostics& d = pe.diagnostics;
    CHECK(d.candidates == 2);
    CHECK(d.pruned_adjacent == 4);
    CHECK(d.pruned_antipode_absent == 1);
    CHECK(d.pruned_cube == 0);
    CHECK(d.pruned_antipode_moves == 0);
}

TEST_CASE("[partition] independent base vertices form singleton components") {
    LabeledColoringGraph lcg = build_coloring_graph(named_graph("N2"), 2);
    auto result = reconstruct_base(lcg.skeleton);
    auto& rep = std::get<LinkReport>(result);
    REQUIRE(rep.base_components.size() == 2);

    PartitionExtraction pe = extract_partition(lcg.skeleton, rep, rep.A[0]);
    REQUIRE(pe.components.size() == 2);
    for (const auto& cp : pe.components) {
        CHECK(cp.cliques.size() == 1);
        REQUIRE(cp.parts.size() == 1); // chromatic number one
        CHECK(cp.parts[0] == cp.cliques);
        CHECK(cp.part_antipodes[0].size() == 1);
    }
}

TEST_CASE("[partition] every link vertex of a cycle extracts cleanly") {
    LabeledColoringGraph lcg = build_coloring_graph(named_graph("C5"), 4);
    auto result = reconstruct_base(lcg.skeleton);
    auto& rep = std::get<LinkReport>(result);
    for (int alpha : rep.A) {
        PartitionExtraction pe = extract_partition(lcg.skeleton, rep, alpha);
        REQUIRE(pe.components.size() == 1);
        CHECK(pe.components[0].parts.size() == 3);
        // parts reproduce the color classes of the retained coloring
        for (const auto& p : pe.components[0].parts) {
            std::set<uint8_t> colors;
            for (int c : p)
                colors.insert(
                    lcg.phi[static_cast<size_t>(alpha)].values[static_cast<size_t>(
                        base_of_clique(lcg, rep, alpha, c))]);
            CHECK(colors.size() == 1);
        }
    }
}

TEST_CASE("[partition] rejects vertices outside the survivor set") {
    LabeledColoringGraph lcg = build_coloring_graph(named_graph("P3"), 3);
    auto result = reconstruct_base(lcg.skeleton);
    auto& rep = std::get<LinkReport>(result);
    CHECK_THROWS_AS(extract_partition(lcg.skeleton, rep, vid(lcg, "123")), std::invalid_argument);
    CHECK_THROWS_AS(extract_partition(lcg.skeleton, rep, -1), std::invalid_argument);
    CHECK_THROWS_AS(extract_partition(lcg.skeleton, rep, 99), std::invalid_argument);
}

TEST_CASE("[partition] json output") {
    LabeledColoringGraph lcg = build_coloring_graph(named_graph("P3"), 3);
    auto result = reconstruct_base(lcg.skeleton);
    auto& rep = std::get<LinkReport>(result);
    PartitionExtraction pe = extract_partition(lcg.skeleton, rep, vid(lcg, "121"));
    std::string j = partition_to_json(pe);
    CHECK(j.find("\"kind\":\"partition\"") != std::string::npos);
    CHECK(j.find("\"parts\"") != std::string::npos);
    CHECK(j.find("pruned") == std::string::npos);
    std::string je = partition_to_json(pe, true);
    CHECK(je.find("pruned_adjacent") != std::string::npos);
}

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <string>

#include "atgrid/choosability.hpp"
#include "atgrid/errors.hpp"

using namespace atgrid;

namespace {

bool is_proper_list_coloring(const Graph& g, const ListAssignment& lists,
                             const std::vector<int>& coloring) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& list = lists[static_cast<std::size_t>(v)];
        if (std::find(list.begin(), list.end(), coloring[static_cast<std::size_t>(v)]) ==
            list.end())
            return false;
    }
    for (const Edge& e : g.edges())
        if (coloring[static_cast<std::size_t>(e.first)] ==
            coloring[static_cast<std::size_t>(e.second)])
            return false;
    return true;
}

}  // namespace

TEST_CASE("list colorability") {
    const Graph c3 = make_cycle(3);
    CHECK(!l_colorable(c3, {{0, 1}, {0, 1}, {0, 1}}).has_value());

    const Graph c4 = make_cycle(4);
    const ListAssignment equal_pairs(4, {0, 1});
    const auto coloring = l_colorable(c4, equal_pairs);
    REQUIRE(coloring.has_value());
    CHECK(is_proper_list_coloring(c4, equal_pairs, *coloring));
    const bool alternating = *coloring == std::vector<int>{0, 1, 0, 1} ||
                             *coloring == std::vector<int>{1, 0, 1, 0};
    CHECK(alternating);

    CHECK(!l_colorable(make_path(2), {{0}, {0}}).has_value());
    CHECK_THROWS_AS(l_colorable(c3, {{0}, {}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(l_colorable(c3, {{0}, {1}}), std::invalid_argument);
}

TEST_CASE("k-choosability verdicts") {
    const ChoosabilityVerdict c4_small = k_choosable(make_cycle(4), 2, 4);
    CHECK(c4_small.choosable);
    CHECK(!c4_small.complete);  // universe below k * |V|

    const ChoosabilityVerdict c4_full = k_choosable(make_cycle(4), 2, 8);
    CHECK(c4_full.choosable);
    CHECK(c4_full.complete);

    const ChoosabilityVerdict c5 = k_choosable(make_cycle(5), 2, 10);
    CHECK(!c5.choosable);
    REQUIRE(c5.witness.has_value());
    // soundness: the witness really admits no list coloring
    CHECK(!l_colorable(make_cycle(5), *c5.witness).has_value());
    // the first canonical assignment is all-equal lists, already bad for C_5
    CHECK(*c5.witness == ListAssignment(5, {0, 1}));

    CHECK(k_choosable(make_cycle(5), 3, 15).choosable);

    CHECK_THROWS_AS(k_choosable(make_cycle(4), 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(k_choosable(make_cycle(4), 0, 4), std::invalid_argument);
}

TEST_CASE("choosable at k implies choosable at k+1 (spot checks)") {
    CHECK(k_choosable(make_cycle(4), 2, 8).choosable);
    CHECK(k_choosable(make_cycle(4), 3, 12).choosable);
    CHECK(k_choosable(make_cycle(5), 3, 15).choosable);
    CHECK(k_choosable(make_cycle(5), 4, 20).choosable);
}

TEST_CASE("canonical assignment counting") {
    CHECK(count_canonical_assignments(1, 1, 1) == "1");
    CHECK(count_canonical_assignments(2, 1, 2) == "2");
    // v1 must take {0,1}; v2 takes {0,1}, {0,2}, {1,2} or {2,3}
    CHECK(count_canonical_assignments(2, 2, 4) == "4");
    // the universe cap bites: {2,3} is no longer available
    CHECK(count_canonical_assignments(2, 2, 3) == "3");
    CHECK(count_canonical_assignments(0, 3, 9) == "1");

    const ChoosabilityVerdict v = k_choosable(make_cycle(4), 2, 8);
    CHECK(std::to_string(v.assignments_total) == count_canonical_assignments(4, 2, 8));
}

TEST_CASE("guard refuses oversized sweeps and quotes the exact count") {
    try {
        k_choosable(make_torus({3, 3}), 3, 27);
        FAIL("guard did not trigger");
    } catch (const GuardError& e) {
        const std::string message = e.what();
        CHECK(message.find("canonical assignments") != std::string::npos);
        CHECK(message.find(count_canonical_assignments(9, 3, 27)) != std::string::npos);
    }
}

TEST_CASE("list chromatic numbers of small graphs") {
    const ListChromaticResult c4 = list_chromatic_number(make_cycle(4), 5);
    CHECK(c4.value == 2);
    REQUIRE(c4.alon_tarsi.has_value());
    CHECK(c4.value <= c4.alon_tarsi->number);

    const ListChromaticResult c5 = list_chromatic_number(make_cycle(5), 5);
    CHECK(c5.value == 3);
    CHECK(c5.alon_tarsi->number == 3);

    const ListChromaticResult k23 = list_chromatic_number(make_complete_bipartite(2, 3), 5);
    CHECK(k23.value == 2);
    CHECK(k23.alon_tarsi->number == 3);
}

TEST_CASE("sandwich chi <= chi_l <= AT on the small bench") {
    const Graph graphs[] = {make_cycle(3), make_cycle(4), make_cycle(5), make_complete(4)};
    for (const Graph& g : graphs) {
        const ListChromaticResult r = list_chromatic_number(g, 6);
        REQUIRE(chromatic_number(g) <= r.value);
        REQUIRE(r.alon_tarsi.has_value());
        REQUIRE(r.value <= r.alon_tarsi->number);
    }
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(make_cycle(4)) == 2);
    CHECK(chromatic_number(make_cycle(5)) == 3);
    CHECK(chromatic_number(make_complete(4)) == 4);
    CHECK(chromatic_number(make_complete_bipartite(2, 4)) == 2);
    CHECK(chromatic_number(Graph(3, {})) == 1);
}

TEST_CASE("nullstellensatz bridge: AT witnesses color sampled list assignments") {
    for (const Graph& g : {make_cycle(4), make_cycle(5)}) {
        const AlonTarsiResult at = alon_tarsi_number(g);
        const int n = g.vertex_count();
        std::vector<ListAssignment> samples;
        // all-equal lists, staggered lists, and an asymmetric mix
        samples.push_back(ListAssignment(static_cast<std::size_t>(n), [&] {
            std::vector<int> base;
            for (int c = 0; c < at.number; ++c) base.push_back(c);
            return base;
        }()));
        {
            ListAssignment staggered;
            for (int v = 0; v < n; ++v) {
                std::vector<int> list;
                for (int c = 0; c < at.number; ++c) list.push_back(v + c);
                staggered.push_back(list);
            }
            samples.push_back(staggered);
        }
        for (const ListAssignment& lists : samples) {
            std::vector<std::vector<std::int64_t>> sets;
            for (const auto& list : lists) sets.emplace_back(list.begin(), list.end());
            const auto point = cn_point_search(g, at.witness, sets);
            REQUIRE(point.has_value());
            std::vector<int> as_colors;
            for (std::int64_t c : *point) as_colors.push_back(static_cast<int>(c));
            REQUIRE(is_proper_list_coloring(g, lists, as_colors));
        }
    }
}

TEST_CASE("negative verdicts carry sound witnesses") {
    const Graph k24 = make_complete_bipartite(2, 4);
    const ChoosabilityVerdict v = k_choosable(k24, 2, 12);
    CHECK(!v.choosable);
    REQUIRE(v.witness.has_value());
    CHECK(!l_colorable(k24, *v.witness).has_value());
    for (const auto& list : *v.witness) CHECK(list.size() == 2);
}

TEST_CASE("verdicts are thread-count independent") {
    const ChoosabilityVerdict a = k_choosable(make_cycle(5), 2, 10, {}, 1);
    const ChoosabilityVerdict b = k_choosable(make_cycle(5), 2, 10, {}, 4);
    CHECK(a.choosable == b.choosable);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(*a.witness == *b.witness);
}

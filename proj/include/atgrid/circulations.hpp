#pragma once

#include <cstdint>
#include <optional>

#include "atgrid/graph.hpp"
#include "atgrid/polycoeff.hpp"

namespace atgrid {

struct CirculationGuards {
    int max_edges = 22;  // arc-subset enumeration is 2^|E|
};

/**
 * Counts of circulations (spanning Eulerian sub-digraphs: arc subsets with
 * in-degree = out-degree at every vertex) by arc-count parity. The empty
 * arc set is a circulation, so even >= 1.
 */
struct CirculationCount {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;

    std::int64_t difference() const noexcept {
        return static_cast<std::int64_t>(even) - static_cast<std::int64_t>(odd);
    }
};

CirculationCount circulation_diff(const Orientation& d, const CirculationGuards& guards = {});

// (-1)^(number of arcs whose head is the larger endpoint). This is the sign
// that links an orientation's circulation difference to the coefficient of
// its indegree monomial: reorienting one edge flips both one endpoint choice
// in the expansion and the parity of every circulation through it.
int sign_of_orientation(const Orientation& d);

struct CorrespondenceReport {
    ExponentVector indegrees;
    std::int64_t coefficient = 0;  // coefficient_of(g, indegrees)
    int sign = 1;
    CirculationCount counts;
    bool matches = false;  // coefficient == sign * (even - odd)
};

CorrespondenceReport verify_at_correspondence(const Graph& g, const Orientation& d,
                                              const PolyGuards& poly_guards = {},
                                              const CirculationGuards& circ_guards = {},
                                              int threads = 0);

struct UpperBoundCertificate {
    Orientation orientation;
    ExponentVector indegrees;
    std::int64_t coefficient = 0;  // nonzero by construction
    int sign = 1;
    std::optional<CirculationCount> counts;  // filled when the guard allows
};

// An orientation with max indegree k-1 whose even/odd circulation counts
// differ, built from a nonzero cap-(k-1) monomial; none when no such
// monomial exists.
std::optional<UpperBoundCertificate> at_upper_bound_certificate(
    const Graph& g, int k, const PolyGuards& poly_guards = {},
    const CirculationGuards& circ_guards = {}, int threads = 0);

}  // namespace atgrid

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "atgrid/graph.hpp"
#include "atgrid/polycoeff.hpp"

namespace atgrid {

// Per-vertex finite color sets (small nonnegative integers).
using ListAssignment = std::vector<std::vector<int>>;

struct ChoosabilityGuards {
    long long max_assignments = 200'000'000;  // canonical enumeration size
};

// A proper coloring drawing each vertex's color from its list, or nullopt
// after exhaustive backtracking (vertices visited in degeneracy order).
std::optional<std::vector<int>> l_colorable(const Graph& g, const ListAssignment& lists);

struct ChoosabilityVerdict {
    bool choosable = false;
    std::optional<ListAssignment> witness;  // a bad assignment when not choosable
    int universe_size = 0;
    // universe >= k * |V| makes the sweep exhaustive up to color renaming;
    // below that bound a positive verdict only means "choosable within the
    // universe" (a negative one is always sound).
    bool complete = false;
    unsigned long long assignments_total = 0;  // canonical assignments in the sweep
};

/**
 * Exhaustive k-choosability over lists drawn from {0..universe-1}.
 * Assignments are enumerated up to color renaming: lists are canonical when
 * every new color extends the already-used range 0..used-1 by consecutive
 * labels. The witness, when present, is the first bad assignment in
 * canonical order (thread-count independent).
 */
ChoosabilityVerdict k_choosable(const Graph& g, int k, int universe,
                                const ChoosabilityGuards& guards = {}, int threads = 0);

// Exact size of the canonical sweep; the guard message quotes it.
std::string count_canonical_assignments(int vertices, int k, int universe);

struct ListChromaticResult {
    int value = 0;
    // Cross-check from the polynomial side when the expansion guard allows:
    // the list chromatic number can never exceed it.
    std::optional<AlonTarsiResult> alon_tarsi;
};

// Smallest k <= kmax that is choosable with the complete universe k * |V|.
ListChromaticResult list_chromatic_number(const Graph& g, int kmax,
                                          const ChoosabilityGuards& guards = {},
                                          const PolyGuards& poly_guards = {}, int threads = 0);

// Ordinary chromatic number by backtracking (constant lists {0..k-1}).
int chromatic_number(const Graph& g, int kmax = 16);

}  // namespace atgrid

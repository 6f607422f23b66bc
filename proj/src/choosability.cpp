#include "atgrid/choosability.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "atgrid/errors.hpp"
#include "atgrid/parallel.hpp"

namespace atgrid {

namespace {

// Smallest-last peel; coloring in the reverse order gives every vertex at
// most degeneracy-many already-colored neighbors.
std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> degree = g.degrees();
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<int> peel;
    peel.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] &&
                (best == -1 || degree[static_cast<std::size_t>(v)] <
                                   degree[static_cast<std::size_t>(best)]))
                best = v;
        removed[static_cast<std::size_t>(best)] = true;
        peel.push_back(best);
        for (int w : g.adjacency()[static_cast<std::size_t>(best)])
            if (!removed[static_cast<std::size_t>(w)]) --degree[static_cast<std::size_t>(w)];
    }
    std::reverse(peel.begin(), peel.end());
    return peel;
}

// Reusable list-coloring backtracker; one instance per worker thread.
class ListColoringSearch {
  public:
    explicit ListColoringSearch(const Graph& g)
        : g_(g), order_(degeneracy_order(g)), color_(static_cast<std::size_t>(g.vertex_count()), -1) {}

    bool colorable(const ListAssignment& lists) {
        lists_ = &lists;
        std::fill(color_.begin(), color_.end(), -1);
        return extend(0);
    }

    const std::vector<int>& coloring() const noexcept { return color_; }

  private:
    bool extend(std::size_t pos) {
        if (pos == order_.size()) return true;
        const int v = order_[pos];
        for (int c : (*lists_)[static_cast<std::size_t>(v)]) {
            bool ok = true;
            for (int w : g_.adjacency()[static_cast<std::size_t>(v)]) {
                if (color_[static_cast<std::size_t>(w)] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color_[static_cast<std::size_t>(v)] = c;
            if (extend(pos + 1)) return true;
            color_[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }

    const Graph& g_;
    std::vector<int> order_;
    std::vector<int> color_;
    const ListAssignment* lists_ = nullptr;
};

void validate_lists(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.size()) != g.vertex_count())
        throw std::invalid_argument("list assignment length != vertex count");
    for (const auto& list : lists) {
        if (list.empty()) throw std::invalid_argument("empty color list");
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                if (list[i] == list[j]) throw std::invalid_argument("repeated color in a list");
    }
}

using Count = unsigned __int128;

std::string to_string_u128(Count v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

// f[u] = number of canonical prefixes using exactly u colors; a list may
// reuse any old colors and must take its fresh ones as the next consecutive
// labels. Returns nullopt on 128-bit overflow.
std::optional<Count> count_canonical(int vertices, int k, int universe) {
    std::vector<Count> f(static_cast<std::size_t>(universe) + 1, 0);
    f[0] = 1;
    const Count limit = ~Count{0};
    for (int v = 0; v < vertices; ++v) {
        std::vector<Count> next(f.size(), 0);
        for (int used = 0; used <= universe; ++used) {
            if (f[static_cast<std::size_t>(used)] == 0) continue;
            for (int fresh = 0; fresh <= k && used + fresh <= universe; ++fresh) {
                const int old = k - fresh;
                if (old > used) continue;
                // C(used, old)
                Count comb = 1;
                for (int i = 0; i < old; ++i) {
                    comb = comb * static_cast<Count>(used - i);
                    comb /= static_cast<Count>(i + 1);
                }
                const Count add = f[static_cast<std::size_t>(used)];
                if (comb != 0 && add > limit / comb) return std::nullopt;
                const Count term = add * comb;
                auto& slot = next[static_cast<std::size_t>(used + fresh)];
                if (slot > limit - term) return std::nullopt;
                slot += term;
            }
        }
        f.swap(next);
    }
    Count total = 0;
    for (Count x : f) {
        if (total > limit - x) return std::nullopt;
        total += x;
    }
    return total;
}

// Generates, for one vertex, every canonical list given `used` colors so
// far: old colors are a (k-fresh)-combination of 0..used-1, fresh colors
// are used..used+fresh-1. Calls fn(list, used_after).
template <class Fn>
void for_each_canonical_list(int k, int used, int universe, Fn&& fn) {
    std::vector<int> list(static_cast<std::size_t>(k));
    for (int fresh = 0; fresh <= k && used + fresh <= universe; ++fresh) {
        const int old = k - fresh;
        if (old > used) continue;
        for (int i = 0; i < fresh; ++i) list[static_cast<std::size_t>(old + i)] = used + i;
        // lexicographic combinations of size `old` from 0..used-1
        std::vector<int> comb(static_cast<std::size_t>(old));
        std::iota(comb.begin(), comb.end(), 0);
        for (;;) {
            for (int i = 0; i < old; ++i) list[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i)];
            fn(list, used + fresh);
            if (old == 0) break;
            int pos = old - 1;
            while (pos >= 0 && comb[static_cast<std::size_t>(pos)] == used - old + pos) --pos;
            if (pos < 0) break;
            ++comb[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < old; ++i)
                comb[static_cast<std::size_t>(i)] = comb[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
}

struct AssignmentPrefix {
    ListAssignment lists;  // first `depth` vertices
    int used = 0;
};

std::vector<AssignmentPrefix> collect_assignment_prefixes(int depth, int k, int universe) {
    std::vector<AssignmentPrefix> prefixes;
    AssignmentPrefix state;
    auto extend = [&](auto&& self, int v) -> void {
        if (v == depth) {
            prefixes.push_back(state);
            return;
        }
        for_each_canonical_list(k, state.used, universe, [&](const std::vector<int>& list, int used_after) {
            state.lists.push_back(list);
            const int saved = state.used;
            state.used = used_after;
            self(self, v + 1);
            state.used = saved;
            state.lists.pop_back();
        });
    };
    extend(extend, 0);
    return prefixes;
}

}  // namespace

std::optional<std::vector<int>> l_colorable(const Graph& g, const ListAssignment& lists) {
    validate_lists(g, lists);
    ListColoringSearch search(g);
    if (!search.colorable(lists)) return std::nullopt;
    return search.coloring();
}

std::string count_canonical_assignments(int vertices, int k, int universe) {
    const auto count = count_canonical(vertices, k, universe);
    return count ? to_string_u128(*count) : std::string("more than 10^38");
}

ChoosabilityVerdict k_choosable(const Graph& g, int k, int universe,
                                const ChoosabilityGuards& guards, int threads) {
    if (k < 1) throw std::invalid_argument("k-choosability needs k >= 1");
    if (universe < k) throw std::invalid_argument("universe smaller than list size k");
    const int n = g.vertex_count();

    ChoosabilityVerdict verdict;
    verdict.universe_size = universe;
    verdict.complete = static_cast<long long>(universe) >= static_cast<long long>(k) * n;

    const auto count = count_canonical(n, k, universe);
    if (!count || *count > static_cast<Count>(guards.max_assignments))
        throw GuardError("k-choosability guard: " + count_canonical_assignments(n, k, universe) +
                         " canonical assignments would be enumerated, limit " +
                         std::to_string(guards.max_assignments));
    verdict.assignments_total = static_cast<unsigned long long>(*count);

    if (n == 0) {
        verdict.choosable = true;
        return verdict;
    }

    const int depth = std::min(n, 3);
    const std::vector<AssignmentPrefix> prefixes = collect_assignment_prefixes(depth, k, universe);

    struct Local {
        std::optional<std::pair<std::size_t, ListAssignment>> witness;
    };
    std::atomic<std::size_t> abort_at{prefixes.size()};

    Local result;
    parallel_chunks<Local>(
        prefixes.size(), threads, result,
        [&](std::size_t begin, std::size_t end, Local& local) {
            ListColoringSearch search(g);
            ListAssignment lists;
            lists.reserve(static_cast<std::size_t>(n));
            for (std::size_t p = begin; p < end; ++p) {
                if (p >= abort_at.load(std::memory_order_relaxed)) break;
                lists = prefixes[p].lists;
                bool found = false;
                auto extend = [&](auto&& self, int v, int used) -> bool {
                    if (v == n) {
                        if (search.colorable(lists)) return false;
                        local.witness = {p, lists};
                        return true;
                    }
                    bool done = false;
                    for_each_canonical_list(k, used, universe,
                                            [&](const std::vector<int>& list, int used_after) {
                                                if (done) return;
                                                lists.push_back(list);
                                                done = self(self, v + 1, used_after);
                                                lists.pop_back();
                                            });
                    return done;
                };
                found = extend(extend, depth, prefixes[p].used);
                if (found) {
                    // Earlier prefixes may still produce an earlier witness;
                    // later ones cannot.
                    std::size_t expect = abort_at.load();
                    while (p < expect && !abort_at.compare_exchange_weak(expect, p)) {}
                    break;
                }
            }
        },
        [](Local& acc, const Local& local) {
            if (local.witness && (!acc.witness || local.witness->first < acc.witness->first))
                acc.witness = local.witness;
        });

    if (result.witness) {
        // The witness ships only after an independent re-check.
        if (l_colorable(g, result.witness->second))
            throw ExactnessError("bad-assignment witness unexpectedly admits a coloring");
        verdict.choosable = false;
        verdict.witness = result.witness->second;
    } else {
        verdict.choosable = true;
    }
    return verdict;
}

ListChromaticResult list_chromatic_number(const Graph& g, int kmax,
                                          const ChoosabilityGuards& guards,
                                          const PolyGuards& poly_guards, int threads) {
    if (kmax < 1) throw std::invalid_argument("kmax must be positive");
    ListChromaticResult result;
    for (int k = 1; k <= kmax; ++k) {
        const int universe = std::max(k, k * g.vertex_count());
        const ChoosabilityVerdict verdict = k_choosable(g, k, universe, guards, threads);
        if (!verdict.choosable) continue;
        result.value = k;
        if (g.edge_count() <= poly_guards.max_expand_edges) {
            result.alon_tarsi = alon_tarsi_number(g, poly_guards, threads);
            if (result.value > result.alon_tarsi->number)
                throw ExactnessError("list chromatic number exceeded the Alon-Tarsi bound");
        }
        return result;
    }
    throw GuardError("graph is not choosable for any k <= " + std::to_string(kmax));
}

int chromatic_number(const Graph& g, int kmax) {
    if (g.vertex_count() == 0) return 0;
    if (g.edge_count() == 0) return 1;
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> palette(static_cast<std::size_t>(k));
        std::iota(palette.begin(), palette.end(), 0);
        const ListAssignment lists(static_cast<std::size_t>(g.vertex_count()), palette);
        if (l_colorable(g, lists)) return k;
    }
    throw GuardError("chromatic number exceeds kmax = " + std::to_string(kmax));
}

}  // namespace atgrid

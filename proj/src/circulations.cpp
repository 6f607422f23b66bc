#include "atgrid/circulations.hpp"

#include <algorithm>
#include <string>

#include "atgrid/errors.hpp"

namespace atgrid {

namespace {

struct CirculationSearch {
    const Orientation& d;
    int m;
    std::vector<int> balance;    // in - out over included arcs
    std::vector<int> remaining;  // undecided arcs incident to each vertex
    CirculationCount counts;

    explicit CirculationSearch(const Orientation& orient)
        : d(orient),
          m(orient.graph().edge_count()),
          balance(static_cast<std::size_t>(orient.graph().vertex_count()), 0),
          remaining(static_cast<std::size_t>(orient.graph().vertex_count()), 0) {
        for (int e = 0; e < m; ++e) {
            ++remaining[static_cast<std::size_t>(d.tail(e))];
            ++remaining[static_cast<std::size_t>(d.head(e))];
        }
    }

    bool feasible(int v) const {
        const auto vi = static_cast<std::size_t>(v);
        return std::abs(balance[vi]) <= remaining[vi];
    }

    void run(int e, int included_parity) {
        if (e == m) {
            // remaining == 0 everywhere, so feasibility already forced
            // balance == 0 at every vertex.
            if (included_parity == 0)
                ++counts.even;
            else
                ++counts.odd;
            return;
        }
        const int t = d.tail(e);
        const int h = d.head(e);
        --remaining[static_cast<std::size_t>(t)];
        --remaining[static_cast<std::size_t>(h)];

        if (feasible(t) && feasible(h)) run(e + 1, included_parity);

        ++balance[static_cast<std::size_t>(h)];
        --balance[static_cast<std::size_t>(t)];
        if (feasible(t) && feasible(h)) run(e + 1, included_parity ^ 1);
        --balance[static_cast<std::size_t>(h)];
        ++balance[static_cast<std::size_t>(t)];

        ++remaining[static_cast<std::size_t>(t)];
        ++remaining[static_cast<std::size_t>(h)];
    }
};

}  // namespace

CirculationCount circulation_diff(const Orientation& d, const CirculationGuards& guards) {
    if (d.graph().edge_count() > guards.max_edges)
        throw GuardError("circulation guard: |E| = " + std::to_string(d.graph().edge_count()) +
                         " exceeds limit " + std::to_string(guards.max_edges));
    CirculationSearch search(d);
    search.run(0, 0);
    return search.counts;
}

int sign_of_orientation(const Orientation& d) {
    int ascending = 0;
    for (int e = 0; e < d.graph().edge_count(); ++e)
        if (d.head(e) == d.graph().edges()[static_cast<std::size_t>(e)].second) ++ascending;
    return (ascending % 2 == 0) ? 1 : -1;
}

CorrespondenceReport verify_at_correspondence(const Graph& g, const Orientation& d,
                                              const PolyGuards& poly_guards,
                                              const CirculationGuards& circ_guards,
                                              int threads) {
    CorrespondenceReport report;
    report.indegrees = d.indegrees();
    report.coefficient = coefficient_of(g, report.indegrees, poly_guards, threads);
    report.sign = sign_of_orientation(d);
    report.counts = circulation_diff(d, circ_guards);
    report.matches = report.coefficient == report.sign * report.counts.difference();
    return report;
}

namespace {

// Backtracking head assignment realizing the target indegree vector. Every
// exponent vector produced by the expansion is realizable (its endpoint
// choices are an orientation), so this search succeeds on expansion output.
bool realize(const Graph& g, std::size_t e, std::vector<int>& need,
             std::vector<int>& remaining, std::vector<int>& heads) {
    if (e == g.edges().size()) return true;
    const int i = g.edges()[e].first;
    const int j = g.edges()[e].second;
    --remaining[static_cast<std::size_t>(i)];
    --remaining[static_cast<std::size_t>(j)];
    for (const int head : {i, j}) {
        auto& n = need[static_cast<std::size_t>(head)];
        if (n == 0) continue;
        --n;
        const bool ok = need[static_cast<std::size_t>(i)] <= remaining[static_cast<std::size_t>(i)] &&
                        need[static_cast<std::size_t>(j)] <= remaining[static_cast<std::size_t>(j)];
        if (ok && realize(g, e + 1, need, remaining, heads)) {
            heads[e] = head;
            ++n;
            ++remaining[static_cast<std::size_t>(i)];
            ++remaining[static_cast<std::size_t>(j)];
            return true;
        }
        ++n;
    }
    ++remaining[static_cast<std::size_t>(i)];
    ++remaining[static_cast<std::size_t>(j)];
    return false;
}

}  // namespace

std::optional<UpperBoundCertificate> at_upper_bound_certificate(
    const Graph& g, int k, const PolyGuards& poly_guards,
    const CirculationGuards& circ_guards, int threads) {
    const CoefficientTable table = expand(g, k - 1, poly_guards, threads);
    if (table.empty()) return std::nullopt;
    const auto& [target, coefficient] = *table.entries().begin();

    std::vector<int> need = target;
    std::vector<int> remaining(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        ++remaining[static_cast<std::size_t>(e.first)];
        ++remaining[static_cast<std::size_t>(e.second)];
    }
    std::vector<int> heads(g.edges().size(), -1);
    if (!realize(g, 0, need, remaining, heads))
        throw ExactnessError("failed to realize an expansion monomial as an orientation");

    UpperBoundCertificate cert{Orientation(g, std::move(heads)), target, coefficient, 1,
                               std::nullopt};
    cert.sign = sign_of_orientation(cert.orientation);
    if (g.edge_count() <= circ_guards.max_edges) {
        cert.counts = circulation_diff(cert.orientation, circ_guards);
        if (cert.sign * cert.counts->difference() != coefficient)
            throw ExactnessError("orientation certificate disagrees with the expansion");
    }
    return cert;
}

}  // namespace atgrid

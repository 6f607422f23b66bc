#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atgrid/eisenstein.hpp"
#include "atgrid/graph.hpp"

namespace atgrid {

// Per-vertex exponents of one monomial of the graph polynomial.
using ExponentVector = std::vector<int>;

struct PolyGuards {
    int max_expand_edges = 26;  // 2^|E| endpoint-choice enumeration
    // Product of |A_i| in a summation; the default admits 16 vertices with
    // three-element sets (3^16 points).
    long long max_formula_points = 50'000'000;
};

/**
 * Sparse exact expansion of the graph polynomial: exponent vector -> signed
 * integer coefficient. Zero coefficients are never stored; every stored key
 * is homogeneous of degree |E|.
 */
class CoefficientTable {
  public:
    using Map = std::map<ExponentVector, std::int64_t>;

    void add(const ExponentVector& key, std::int64_t delta);
    void merge(const CoefficientTable& other);

    std::int64_t coefficient(const ExponentVector& key) const;
    const Map& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    // One JSON object per line: {"exponents":[...],"coefficient":c}.
    std::string to_json_lines() const;

    friend bool operator==(const CoefficientTable& x, const CoefficientTable& y) noexcept {
        return x.entries_ == y.entries_;
    }

  private:
    Map entries_;
};

/**
 * Exact expansion of f_g over the 2^|E| endpoint choices. With a cap, any
 * branch whose running exponent exceeds the cap at some vertex is pruned,
 * so the result is exactly the monomials with all exponents <= cap.
 */
CoefficientTable expand(const Graph& g, std::optional<int> cap = std::nullopt,
                        const PolyGuards& guards = {}, int threads = 0);

// Signed coefficient of the monomial with exponents t. Returns 0 without
// expanding when the degree does not match |E| (homogeneity).
std::int64_t coefficient_of(const Graph& g, const ExponentVector& t,
                            const PolyGuards& guards = {}, int threads = 0);

// prod_i prod_{b in A_i \ {a_i}} (a_i - b); the denominator weight of the
// coefficient-formula summand at the point. Never zero for distinct sets.
std::int64_t interpolation_weight(const std::vector<std::int64_t>& point,
                                  const std::vector<std::vector<std::int64_t>>& sets);
EisensteinInt interpolation_weight(const std::vector<EisensteinInt>& point,
                                   const std::vector<std::vector<EisensteinInt>>& sets);

// Coefficient of the monomial with exponents t computed as the weighted sum
// of f_g over A_1 x ... x A_n, |A_i| = t_i + 1. Exactness is asserted: the
// rational (resp. Q(w)) sum must come out integral.
std::int64_t coefficient_formula(const Graph& g, const ExponentVector& t,
                                 const std::vector<std::vector<std::int64_t>>& sets,
                                 const PolyGuards& guards = {}, int threads = 0);
EisensteinInt coefficient_formula(const Graph& g, const ExponentVector& t,
                                  const std::vector<std::vector<EisensteinInt>>& sets,
                                  const PolyGuards& guards = {}, int threads = 0);

// First point of S_1 x ... x S_n (mixed-radix order) where f_g does not
// vanish. Requires |S_i| > t_i; when coefficient_of(g, t) != 0 such a point
// exists and is a proper coloring from the sets.
std::optional<std::vector<std::int64_t>> cn_point_search(
    const Graph& g, const ExponentVector& t,
    const std::vector<std::vector<std::int64_t>>& sets, const PolyGuards& guards = {});

struct AlonTarsiResult {
    int number = 0;
    ExponentVector witness;       // lexicographically smallest nonzero monomial at the cap
    std::int64_t coefficient = 0; // its signed coefficient
};

// Smallest k such that the cap-(k-1) expansion is nonempty.
AlonTarsiResult alon_tarsi_number(const Graph& g, const PolyGuards& guards = {},
                                  int threads = 0);

// Direct evaluation of f_g = prod_{(i,j) in E, i<j} (x_i - x_j).
std::int64_t evaluate_graph_poly(const Graph& g, const std::vector<std::int64_t>& point);
EisensteinInt evaluate_graph_poly(const Graph& g, const std::vector<EisensteinInt>& point);

}  // namespace atgrid

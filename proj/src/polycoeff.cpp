#include "atgrid/polycoeff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "atgrid/checked.hpp"
#include "atgrid/errors.hpp"
#include "atgrid/parallel.hpp"
#include "atgrid/rational.hpp"

namespace atgrid {

void CoefficientTable::add(const ExponentVector& key, std::int64_t delta) {
    if (delta == 0) return;
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, delta);
        return;
    }
    it->second = checked_add(it->second, delta);
    if (it->second == 0) entries_.erase(it);
}

void CoefficientTable::merge(const CoefficientTable& other) {
    for (const auto& [key, value] : other.entries_) add(key, value);
}

std::int64_t CoefficientTable::coefficient(const ExponentVector& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
}

std::string CoefficientTable::to_json_lines() const {
    std::ostringstream os;
    for (const auto& [key, value] : entries_) {
        os << "{\"exponents\":[";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i) os << ',';
            os << key[i];
        }
        os << "],\"coefficient\":" << value << "}\n";
    }
    return os.str();
}

namespace {

void check_expand_guard(const Graph& g, const PolyGuards& guards) {
    if (g.edge_count() > guards.max_expand_edges)
        throw GuardError("expansion guard: |E| = " + std::to_string(g.edge_count()) +
                         " exceeds limit " + std::to_string(guards.max_expand_edges));
}

// Endpoint-choice DFS: at edge (i, j) pick x_i (sign kept) or x_j (sign
// flipped), incrementing the picked vertex's exponent. Branches exceeding
// the cap die immediately.
template <class OnLeaf>
void expand_dfs(const std::vector<Edge>& edges, std::size_t depth, std::size_t stop,
                ExponentVector& exp, const ExponentVector* cap, int sign, OnLeaf&& on_leaf) {
    if (depth == stop) {
        on_leaf(exp, sign);
        return;
    }
    const int i = edges[depth].first;
    const int j = edges[depth].second;
    int& ei = exp[static_cast<std::size_t>(i)];
    ++ei;
    if (!cap || ei <= (*cap)[static_cast<std::size_t>(i)])
        expand_dfs(edges, depth + 1, stop, exp, cap, sign, on_leaf);
    --ei;
    int& ej = exp[static_cast<std::size_t>(j)];
    ++ej;
    if (!cap || ej <= (*cap)[static_cast<std::size_t>(j)])
        expand_dfs(edges, depth + 1, stop, exp, cap, -sign, on_leaf);
    --ej;
}

struct PrefixState {
    ExponentVector exp;
    int sign = 1;
};

// Materializes the live DFS states at a fixed depth; workers divide them up.
std::vector<PrefixState> collect_prefixes(const Graph& g, std::size_t prefix_depth,
                                          const ExponentVector* cap) {
    std::vector<PrefixState> prefixes;
    ExponentVector exp(static_cast<std::size_t>(g.vertex_count()), 0);
    expand_dfs(g.edges(), 0, prefix_depth, exp, cap, 1,
               [&](const ExponentVector& state, int sign) {
                   prefixes.push_back({state, sign});
               });
    return prefixes;
}

std::size_t pick_prefix_depth(std::size_t edge_count, int threads) {
    if (threads <= 1 || edge_count < 8) return 0;
    std::size_t depth = 0;
    while (depth < edge_count && depth < 12 &&
           (std::size_t{1} << depth) < static_cast<std::size_t>(threads) * 8)
        ++depth;
    return depth;
}

CoefficientTable expand_core(const Graph& g, const ExponentVector* cap, int threads) {
    if (threads <= 0) threads = default_thread_count();
    const std::size_t depth = pick_prefix_depth(g.edges().size(), threads);
    const std::vector<PrefixState> prefixes = collect_prefixes(g, depth, cap);
    CoefficientTable table;
    parallel_chunks<CoefficientTable>(
        prefixes.size(), threads, table,
        [&](std::size_t begin, std::size_t end, CoefficientTable& local) {
            ExponentVector exp;
            for (std::size_t p = begin; p < end; ++p) {
                exp = prefixes[p].exp;
                expand_dfs(g.edges(), depth, g.edges().size(), exp, cap, prefixes[p].sign,
                           [&](const ExponentVector& key, int sign) { local.add(key, sign); });
            }
        },
        [](CoefficientTable& acc, const CoefficientTable& local) { acc.merge(local); });
    return table;
}

}  // namespace

CoefficientTable expand(const Graph& g, std::optional<int> cap, const PolyGuards& guards,
                        int threads) {
    check_expand_guard(g, guards);
    if (!cap) return expand_core(g, nullptr, threads);
    if (*cap < 0) return {};
    // A capped table is empty whenever n * cap < |E| (homogeneity).
    if (static_cast<long long>(*cap) * g.vertex_count() < g.edge_count()) return {};
    const ExponentVector cap_vec(static_cast<std::size_t>(g.vertex_count()), *cap);
    return expand_core(g, &cap_vec, threads);
}

std::int64_t coefficient_of(const Graph& g, const ExponentVector& t, const PolyGuards& guards,
                            int threads) {
    if (static_cast<int>(t.size()) != g.vertex_count())
        throw std::invalid_argument("exponent vector length != vertex count");
    long long total = 0;
    for (int e : t) {
        if (e < 0) return 0;
        total += e;
    }
    if (total != g.edge_count()) return 0;  // homogeneity, no expansion needed
    check_expand_guard(g, guards);

    if (threads <= 0) threads = default_thread_count();
    const std::size_t depth = pick_prefix_depth(g.edges().size(), threads);
    const std::vector<PrefixState> prefixes = collect_prefixes(g, depth, &t);
    std::int64_t sum = 0;
    parallel_chunks<std::int64_t>(
        prefixes.size(), threads, sum,
        [&](std::size_t begin, std::size_t end, std::int64_t& local) {
            ExponentVector exp;
            for (std::size_t p = begin; p < end; ++p) {
                exp = prefixes[p].exp;
                // Every surviving leaf has exp == t: exponents are capped by t
                // pointwise and both sum to |E|.
                expand_dfs(g.edges(), depth, g.edges().size(), exp, &t, prefixes[p].sign,
                           [&](const ExponentVector&, int sign) { local += sign; });
            }
        },
        [](std::int64_t& acc, const std::int64_t& local) { acc = checked_add(acc, local); });
    return sum;
}

namespace {

template <class Value>
void check_distinct(const std::vector<Value>& set, const char* what) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j]) throw std::invalid_argument(std::string(what) + ": repeated value in set");
}

// Field policies for the two coefficient-formula modes.
struct IntOps {
    using Value = std::int64_t;
    using Sum = Rational;
    static Value sub(Value x, Value y) { return checked_sub(x, y); }
    static Value mul(Value x, Value y) { return checked_mul(x, y); }
    static bool is_zero(Value x) { return x == 0; }
    static Value one() { return 1; }
    static void add_quotient(Sum& sum, Value num, Value den) {
        sum += Rational(num) / Rational(den);
    }
    static Value finish(const Sum& sum) { return sum.to_integer(); }
};

struct EisOps {
    using Value = EisensteinInt;
    using Sum = EisensteinFrac;
    static Value sub(const Value& x, const Value& y) { return x - y; }
    static Value mul(const Value& x, const Value& y) { return x * y; }
    static bool is_zero(const Value& x) { return x.is_zero(); }
    static Value one() { return EisensteinInt::one(); }
    static void add_quotient(Sum& sum, const Value& num, const Value& den) {
        sum += EisensteinFrac(num) / den;
    }
    static Value finish(const Sum& sum) { return sum.to_eisenstein(); }
};

template <class Ops>
typename Ops::Value interpolation_weight_impl(
    const std::vector<typename Ops::Value>& point,
    const std::vector<std::vector<typename Ops::Value>>& sets) {
    if (point.size() != sets.size())
        throw std::invalid_argument("point length != set count");
    typename Ops::Value weight = Ops::one();
    for (std::size_t i = 0; i < point.size(); ++i) {
        check_distinct(sets[i], "interpolation weight");
        bool member = false;
        for (const auto& b : sets[i]) {
            if (b == point[i]) {
                member = true;
                continue;
            }
            weight = Ops::mul(weight, Ops::sub(point[i], b));
        }
        if (!member)
            throw std::invalid_argument("interpolation weight: point coordinate " +
                                        std::to_string(i) + " not in its set");
    }
    return weight;
}

template <class Ops>
typename Ops::Value evaluate_poly_impl(const Graph& g,
                                       const std::vector<typename Ops::Value>& point) {
    if (static_cast<int>(point.size()) != g.vertex_count())
        throw std::invalid_argument("point length != vertex count");
    typename Ops::Value value = Ops::one();
    for (const Edge& e : g.edges()) {
        const auto factor = Ops::sub(point[static_cast<std::size_t>(e.first)],
                                     point[static_cast<std::size_t>(e.second)]);
        if (Ops::is_zero(factor)) return factor;
        value = Ops::mul(value, factor);
    }
    return value;
}

template <class Ops>
typename Ops::Value coefficient_formula_impl(
    const Graph& g, const ExponentVector& t,
    const std::vector<std::vector<typename Ops::Value>>& sets, const PolyGuards& guards,
    int threads) {
    const int n = g.vertex_count();
    if (static_cast<int>(t.size()) != n || static_cast<int>(sets.size()) != n)
        throw std::invalid_argument("coefficient formula: lengths must equal vertex count");
    long long total_deg = 0;
    long long points = 1;
    for (int i = 0; i < n; ++i) {
        if (t[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("coefficient formula: negative exponent");
        if (sets[static_cast<std::size_t>(i)].size() !=
            static_cast<std::size_t>(t[static_cast<std::size_t>(i)]) + 1)
            throw std::invalid_argument("coefficient formula: set-size mismatch, need |A_i| = t_i + 1");
        check_distinct(sets[static_cast<std::size_t>(i)], "coefficient formula");
        total_deg += t[static_cast<std::size_t>(i)];
        points = checked_mul(points, static_cast<long long>(sets[static_cast<std::size_t>(i)].size()));
        if (points > guards.max_formula_points)
            throw GuardError("coefficient formula guard: summation over " +
                             std::to_string(points) + "+ points exceeds limit " +
                             std::to_string(guards.max_formula_points));
    }
    if (total_deg < g.edge_count())
        throw std::invalid_argument("coefficient formula: total degree below deg f_g");

    // Per-vertex, per-choice denominator factors N_i(a) = prod_{b != a}(a - b).
    std::vector<std::vector<typename Ops::Value>> weights(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& set = sets[static_cast<std::size_t>(i)];
        auto& w = weights[static_cast<std::size_t>(i)];
        w.reserve(set.size());
        for (std::size_t c = 0; c < set.size(); ++c) {
            typename Ops::Value f = Ops::one();
            for (std::size_t b = 0; b < set.size(); ++b)
                if (b != c) f = Ops::mul(f, Ops::sub(set[c], set[b]));
            w.push_back(f);
        }
    }

    typename Ops::Sum total{};
    parallel_chunks<typename Ops::Sum>(
        static_cast<std::size_t>(points), threads, total,
        [&](std::size_t begin, std::size_t end, typename Ops::Sum& local) {
            std::vector<typename Ops::Value> point(static_cast<std::size_t>(n));
            std::vector<std::size_t> digit(static_cast<std::size_t>(n));
            for (std::size_t flat = begin; flat < end; ++flat) {
                std::size_t rem = flat;
                for (int i = n - 1; i >= 0; --i) {
                    const std::size_t base = sets[static_cast<std::size_t>(i)].size();
                    digit[static_cast<std::size_t>(i)] = rem % base;
                    rem /= base;
                    point[static_cast<std::size_t>(i)] =
                        sets[static_cast<std::size_t>(i)][digit[static_cast<std::size_t>(i)]];
                }
                const auto value = evaluate_poly_impl<Ops>(g, point);
                if (Ops::is_zero(value)) continue;
                typename Ops::Value den = Ops::one();
                for (int i = 0; i < n; ++i)
                    den = Ops::mul(den, weights[static_cast<std::size_t>(i)]
                                              [digit[static_cast<std::size_t>(i)]]);
                Ops::add_quotient(local, value, den);
            }
        },
        [](typename Ops::Sum& acc, const typename Ops::Sum& local) { acc += local; });
    return Ops::finish(total);
}

}  // namespace

std::int64_t interpolation_weight(const std::vector<std::int64_t>& point,
                                  const std::vector<std::vector<std::int64_t>>& sets) {
    return interpolation_weight_impl<IntOps>(point, sets);
}

EisensteinInt interpolation_weight(const std::vector<EisensteinInt>& point,
                                   const std::vector<std::vector<EisensteinInt>>& sets) {
    return interpolation_weight_impl<EisOps>(point, sets);
}

std::int64_t coefficient_formula(const Graph& g, const ExponentVector& t,
                                 const std::vector<std::vector<std::int64_t>>& sets,
                                 const PolyGuards& guards, int threads) {
    return coefficient_formula_impl<IntOps>(g, t, sets, guards, threads);
}

EisensteinInt coefficient_formula(const Graph& g, const ExponentVector& t,
                                  const std::vector<std::vector<EisensteinInt>>& sets,
                                  const PolyGuards& guards, int threads) {
    return coefficient_formula_impl<EisOps>(g, t, sets, guards, threads);
}

std::optional<std::vector<std::int64_t>> cn_point_search(
    const Graph& g, const ExponentVector& t,
    const std::vector<std::vector<std::int64_t>>& sets, const PolyGuards& guards) {
    const int n = g.vertex_count();
    if (static_cast<int>(t.size()) != n || static_cast<int>(sets.size()) != n)
        throw std::invalid_argument("cn point search: lengths must equal vertex count");
    long long points = 1;
    for (int i = 0; i < n; ++i) {
        check_distinct(sets[static_cast<std::size_t>(i)], "cn point search");
        if (static_cast<long long>(sets[static_cast<std::size_t>(i)].size()) <=
            t[static_cast<std::size_t>(i)])
            throw std::invalid_argument("cn point search: need |S_i| > t_i at vertex " +
                                        std::to_string(i));
        points = checked_mul(points, static_cast<long long>(sets[static_cast<std::size_t>(i)].size()));
        if (points > guards.max_formula_points)
            throw GuardError("cn point search guard: " + std::to_string(points) +
                             "+ points exceeds limit " +
                             std::to_string(guards.max_formula_points));
    }
    std::vector<std::int64_t> point(static_cast<std::size_t>(n));
    for (std::size_t flat = 0; flat < static_cast<std::size_t>(points); ++flat) {
        std::size_t rem = flat;
        for (int i = n - 1; i >= 0; --i) {
            const auto& set = sets[static_cast<std::size_t>(i)];
            point[static_cast<std::size_t>(i)] = set[rem % set.size()];
            rem /= set.size();
        }
        if (evaluate_graph_poly(g, point) != 0) return point;
    }
    return std::nullopt;
}

AlonTarsiResult alon_tarsi_number(const Graph& g, const PolyGuards& guards, int threads) {
    check_expand_guard(g, guards);
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m == 0) return {1, ExponentVector(static_cast<std::size_t>(n), 0), 1};
    // A monomial with all exponents <= k-1 has degree <= n(k-1), which must
    // reach |E|, so the search starts at 1 + ceil(|E| / n).
    int k = 1 + (m + n - 1) / n;
    for (;; ++k) {
        const CoefficientTable table = expand(g, k - 1, guards, threads);
        if (!table.empty()) {
            const auto& [key, value] = *table.entries().begin();
            return {k, key, value};
        }
    }
}

std::int64_t evaluate_graph_poly(const Graph& g, const std::vector<std::int64_t>& point) {
    return evaluate_poly_impl<IntOps>(g, point);
}

EisensteinInt evaluate_graph_poly(const Graph& g, const std::vector<EisensteinInt>& point) {
    return evaluate_poly_impl<EisOps>(g, point);
}

}  // namespace atgrid

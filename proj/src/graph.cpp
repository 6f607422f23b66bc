#include "atgrid/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "atgrid/errors.hpp"

namespace atgrid {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (Edge& e : edges_) {
        if (e.first == e.second)
            throw std::invalid_argument("loop at vertex " + std::to_string(e.first));
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
        adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
    }
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
        ++deg[static_cast<std::size_t>(e.first)];
        ++deg[static_cast<std::size_t>(e.second)];
    }
    return deg;
}

bool Graph::is_regular(int d) const {
    const std::vector<int> deg = degrees();
    return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return {n, std::move(edges)};
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return {n, std::move(edges)};
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return {n, std::move(edges)};
}

Graph make_complete_bipartite(int left, int right) {
    if (left < 1 || right < 1)
        throw std::invalid_argument("complete bipartite graph needs nonempty sides");
    std::vector<Edge> edges;
    for (int i = 0; i < left; ++i)
        for (int j = 0; j < right; ++j) edges.emplace_back(i, left + j);
    return {left + right, std::move(edges)};
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(nh) * g.edges().size() +
                  static_cast<std::size_t>(ng) * h.edges().size());
    for (int v = 0; v < nh; ++v)
        for (const Edge& e : g.edges())
            edges.emplace_back(v * ng + e.first, v * ng + e.second);
    for (const Edge& e : h.edges())
        for (int u = 0; u < ng; ++u)
            edges.emplace_back(e.first * ng + u, e.second * ng + u);
    return {ng * nh, std::move(edges)};
}

Graph make_torus(const TorusSpec& spec) {
    if (spec.rows < 3 || spec.cols < 3)
        throw std::invalid_argument("toroidal grid needs both cycle lengths >= 3");
    return cartesian_product(make_cycle(spec.rows), make_cycle(spec.cols));
}

Orientation::Orientation(Graph graph, std::vector<int> heads)
    : graph_(std::move(graph)), heads_(std::move(heads)) {
    if (heads_.size() != graph_.edges().size())
        throw std::invalid_argument("orientation head count != edge count");
    for (std::size_t e = 0; e < heads_.size(); ++e) {
        const Edge& ed = graph_.edges()[e];
        if (heads_[e] != ed.first && heads_[e] != ed.second)
            throw std::invalid_argument("head " + std::to_string(heads_[e]) +
                                        " is not an endpoint of edge " + std::to_string(e));
    }
}

Orientation Orientation::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    for (const auto& [t, h] : arcs) edges.emplace_back(std::min(t, h), std::max(t, h));
    Graph g(n, std::move(edges));
    // Map each canonical edge back to the head named by its arc.
    std::vector<int> heads(g.edges().size(), -1);
    for (const auto& [t, h] : arcs) {
        const Edge key{std::min(t, h), std::max(t, h)};
        const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), key);
        heads[static_cast<std::size_t>(it - g.edges().begin())] = h;
    }
    return {std::move(g), std::move(heads)};
}

std::vector<int> Orientation::indegrees() const {
    std::vector<int> indeg(static_cast<std::size_t>(graph_.vertex_count()), 0);
    for (int h : heads_) ++indeg[static_cast<std::size_t>(h)];
    return indeg;
}

int Orientation::max_indegree() const {
    const std::vector<int> indeg = indegrees();
    return indeg.empty() ? 0 : *std::max_element(indeg.begin(), indeg.end());
}

namespace {

struct HeaderAndPairs {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
};

HeaderAndPairs parse_pairs_file(const std::string& text, const char* what) {
    std::istringstream in(text);
    std::string line;
    HeaderAndPairs out;
    long long m = -1;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (m < 0) {
            long long n;
            if (!(ls >> n >> m) || !(ls >> std::ws).eof() || n < 0 || m < 0)
                throw ParseError(std::string(what) + ": malformed header at line " +
                                 std::to_string(lineno));
            out.n = static_cast<int>(n);
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v) || !(ls >> std::ws).eof())
            throw ParseError(std::string(what) + ": malformed line " + std::to_string(lineno) +
                             ": \"" + line + "\"");
        if (u < 0 || v < 0 || u >= out.n || v >= out.n)
            throw ParseError(std::string(what) + ": vertex out of range at line " +
                             std::to_string(lineno));
        out.pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (m < 0) throw ParseError(std::string(what) + ": missing header");
    if (static_cast<long long>(out.pairs.size()) != m)
        throw ParseError(std::string(what) + ": header promises " + std::to_string(m) +
                         " lines, found " + std::to_string(out.pairs.size()));
    return out;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    HeaderAndPairs hp = parse_pairs_file(text, "edge list");
    std::set<Edge> seen;
    for (auto& [u, v] : hp.pairs) {
        if (u == v) throw ParseError("edge list: loop at vertex " + std::to_string(u));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ParseError("edge list: duplicate edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
    }
    return {hp.n, std::move(hp.pairs)};
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) os << e.first << ' ' << e.second << '\n';
    return os.str();
}

Orientation parse_orientation(const std::string& text) {
    HeaderAndPairs hp = parse_pairs_file(text, "orientation");
    std::set<Edge> seen;
    for (auto& [t, h] : hp.pairs) {
        if (t == h) throw ParseError("orientation: loop at vertex " + std::to_string(t));
        if (!seen.insert({std::min(t, h), std::max(t, h)}).second)
            throw ParseError("orientation: duplicate edge (" + std::to_string(t) + "," +
                             std::to_string(h) + ")");
    }
    return Orientation::from_arcs(hp.n, hp.pairs);
}

std::string serialize_orientation(const Orientation& d) {
    std::ostringstream os;
    os << d.graph().vertex_count() << ' ' << d.graph().edge_count() << '\n';
    for (int e = 0; e < d.graph().edge_count(); ++e) os << d.tail(e) << ' ' << d.head(e) << '\n';
    return os.str();
}

}  // namespace atgrid

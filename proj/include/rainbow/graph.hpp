#pragma once

// Simple undirected graphs, proper colorings, and the path predicates
// (induced / rainbow / colorful) everything else is checked against.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <initializer_list>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/vertex_set.hpp"

namespace rainbow {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertex ids 0..n-1 with bitset adjacency.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    /// Repeated pairs (in either orientation) collapse to one edge.
    Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n, VertexSet(n)) {
        for (const auto &[u, v] : edges) {
            if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
                throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                            std::to_string(v) + ")");
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (!adjacency_[u].contains(v)) ++edge_count_;
            adjacency_[u].insert(v);
            adjacency_[v].insert(u);
        }
    }

    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return contains(u) && adjacency_[u].contains(v); }
    const VertexSet &neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool contains(Vertex v) const { return v >= 0 && static_cast<std::size_t>(v) < adjacency_.size(); }

    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
    VertexSet empty_set() const { return VertexSet(vertex_count()); }

    /// Edges as (u, v) with u < v, lexicographic.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t u = 0; u < adjacency_.size(); ++u)
            adjacency_[u].for_each([&](Vertex v) {
                if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
            });
        return out;
    }

    friend bool operator==(const Graph &a, const Graph &b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<VertexSet> adjacency_;
    std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) { return Graph(n, edges); }

/// Total vertex -> color map. Colors are positive integers, not necessarily contiguous.
class Coloring {
public:
    Coloring() = default;

    explicit Coloring(std::vector<Color> assignment) : assignment_(std::move(assignment)) {
        for (auto c : assignment_)
            if (c <= 0) throw std::invalid_argument("colors must be positive integers");
    }

    Coloring(std::initializer_list<Color> assignment) : Coloring(std::vector<Color>(assignment)) {}

    std::size_t size() const { return assignment_.size(); }
    Color operator[](Vertex v) const { return assignment_.at(static_cast<std::size_t>(v)); }
    const std::vector<Color> &assignment() const { return assignment_; }

    std::size_t palette_size() const {
        return std::set<Color>(assignment_.begin(), assignment_.end()).size();
    }

    /// Distinct colors in increasing order.
    std::vector<Color> palette() const {
        std::set<Color> s(assignment_.begin(), assignment_.end());
        return {s.begin(), s.end()};
    }

    friend bool operator==(const Coloring &, const Coloring &) = default;

private:
    std::vector<Color> assignment_;
};

/// Throws std::invalid_argument when the coloring is partial (size mismatch).
inline bool is_proper(const Graph &g, const Coloring &c) {
    if (c.size() != g.vertex_count()) throw std::invalid_argument("coloring is not total on the vertex set");
    for (const auto &[u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

/// A graph together with a proper coloring of it.
class ColoredGraph {
public:
    ColoredGraph(Graph graph, Coloring coloring) : graph_(std::move(graph)), coloring_(std::move(coloring)) {
        if (!is_proper(graph_, coloring_)) throw std::invalid_argument("coloring is not proper");
    }

    const Graph &graph() const { return graph_; }
    const Coloring &coloring() const { return coloring_; }
    Color color(Vertex v) const { return coloring_[v]; }

private:
    Graph graph_;
    Coloring coloring_;
};

/// Ordered vertex sequence; validity against a host graph is checked by classify_path.
struct Path {
    std::vector<Vertex> vertices;

    std::size_t order() const { return vertices.size(); }
    bool empty() const { return vertices.empty(); }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }

    friend bool operator==(const Path &, const Path &) = default;
};

struct PathReport {
    std::size_t order = 0;
    bool is_induced = false;
    bool is_rainbow = false;
    std::size_t color_count = 0;
};

inline bool is_triangle_free(const Graph &g) {
    for (const auto &[u, v] : g.edges())
        if (g.neighbors(u).intersects(g.neighbors(v))) return false;
    return true;
}

/// Three pairwise adjacent vertices (ascending), if any.
inline std::optional<std::vector<Vertex>> find_triangle(const Graph &g) {
    for (const auto &[u, v] : g.edges()) {
        const auto common = g.neighbors(u) & g.neighbors(v);
        if (!common.empty()) {
            std::vector<Vertex> t{u, v, common.first()};
            std::sort(t.begin(), t.end());
            return t;
        }
    }
    return std::nullopt;
}

/// Components restricted to `within`, each ascending, ordered by minimum id.
inline std::vector<std::vector<Vertex>> connected_components(const Graph &g, const VertexSet &within) {
    std::vector<std::vector<Vertex>> out;
    auto unseen = within;
    while (!unseen.empty()) {
        const Vertex root = unseen.first();
        VertexSet comp(g.vertex_count());
        std::deque<Vertex> queue{root};
        comp.insert(root);
        unseen.erase(root);
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            (g.neighbors(u) & unseen).for_each([&](Vertex v) {
                unseen.erase(v);
                comp.insert(v);
                queue.push_back(v);
            });
        }
        out.push_back(comp.to_vector());
    }
    return out;
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
    return connected_components(g, g.all_vertices());
}

inline bool is_connected(const Graph &g) { return connected_components(g).size() <= 1; }

/// G[S] with the id mapping recorded in both directions.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;   ///< local id -> parent id
    std::vector<Vertex> from_parent; ///< parent id -> local id, or -1 when outside S

    Vertex local(Vertex parent) const { return from_parent.at(static_cast<std::size_t>(parent)); }
    Vertex parent(Vertex local) const { return to_parent.at(static_cast<std::size_t>(local)); }

    Path lift(const Path &p) const {
        Path out;
        for (auto v : p.vertices) out.vertices.push_back(parent(v));
        return out;
    }
};

/// Local ids follow increasing parent id. Throws std::invalid_argument for vertices outside g.
inline InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> members) {
    InducedSubgraph out;
    out.from_parent.assign(g.vertex_count(), -1);
    std::vector<Vertex> sorted(members.begin(), members.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto v : sorted) {
        if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the graph");
        out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.adjacent(sorted[i], sorted[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    out.graph = Graph(sorted.size(), edges);
    return out;
}

inline InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &members) {
    const auto v = members.to_vector();
    return induced_subgraph(g, std::span<const Vertex>(v));
}

inline Coloring restrict_coloring(const Coloring &c, const InducedSubgraph &sub) {
    std::vector<Color> out;
    out.reserve(sub.to_parent.size());
    for (auto v : sub.to_parent) out.push_back(c[v]);
    return Coloring(std::move(out));
}

inline ColoredGraph induced_colored_subgraph(const ColoredGraph &cg, const InducedSubgraph &sub) {
    return ColoredGraph(sub.graph, restrict_coloring(cg.coloring(), sub));
}

/// True iff `seq` is a sequence of distinct vertices of g with consecutive ones adjacent.
/// The empty sequence is not a path.
inline bool is_path(const Graph &g, std::span<const Vertex> seq) {
    if (seq.empty()) return false;
    VertexSet seen(g.vertex_count());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!g.contains(seq[i]) || seen.contains(seq[i])) return false;
        seen.insert(seq[i]);
        if (i > 0 && !g.adjacent(seq[i - 1], seq[i])) return false;
    }
    return true;
}

/// Throws std::invalid_argument when `seq` is not a path of cg.graph().
inline PathReport classify_path(const ColoredGraph &cg, std::span<const Vertex> seq) {
    const auto &g = cg.graph();
    if (!is_path(g, seq)) throw std::invalid_argument("vertex sequence is not a path in the graph");
    PathReport r;
    r.order = seq.size();
    r.is_induced = true;
    for (std::size_t i = 0; i < seq.size() && r.is_induced; ++i)
        for (std::size_t j = i + 2; j < seq.size(); ++j)
            if (g.adjacent(seq[i], seq[j])) {
                r.is_induced = false;
                break;
            }
    std::set<Color> colors;
    for (auto v : seq) colors.insert(cg.color(v));
    r.color_count = colors.size();
    r.is_rainbow = r.color_count == r.order;
    return r;
}

inline PathReport classify_path(const ColoredGraph &cg, const Path &p) {
    return classify_path(cg, std::span<const Vertex>(p.vertices));
}

/// BFS shortest path from v to the first-reached vertex of `targets`; frontier
/// vertices are expanded in increasing id order at each distance. The result
/// touches `targets` only at its last vertex. Throws std::invalid_argument when
/// no target is reachable or `targets` is empty.
inline Path shortest_path_to_set(const Graph &g, Vertex v, const VertexSet &targets) {
    if (!g.contains(v)) throw std::invalid_argument("start vertex is not in the graph");
    if (targets.empty()) throw std::invalid_argument("target set is empty");
    if (targets.contains(v)) return Path{{v}};

    std::vector<Vertex> parent(g.vertex_count(), -1);
    VertexSet visited(g.vertex_count());
    visited.insert(v);
    std::vector<Vertex> frontier{v};
    while (!frontier.empty()) {
        std::vector<Vertex> next;
        for (auto u : frontier) {
            auto fresh = g.neighbors(u) - visited;
            std::vector<Vertex> ordered = fresh.to_vector();
            for (auto x : ordered) {
                visited.insert(x);
                parent[x] = u;
                if (targets.contains(x)) {
                    Path p;
                    for (Vertex cur = x; cur != -1; cur = parent[cur]) p.vertices.push_back(cur);
                    std::reverse(p.vertices.begin(), p.vertices.end());
                    return p;
                }
                next.push_back(x);
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    throw std::invalid_argument("target set is unreachable from the start vertex");
}

} // namespace rainbow

#pragma once

// Induced colorful path from a fixed start vertex in a connected triangle-free
// colored graph, seeing at least ceil(chi_lb / 2) colors where chi_lb is a
// lower bound on the chromatic number.
//
// One recursion level, starting at v with color c:
//   G'   = G minus every vertex of color c
//   C1   = component of G' with the largest chromatic number
//   P    = shortest path from v to C1, w its penultimate vertex
//   N    = N(w) ∩ C1 (independent, since G is triangle-free)
//   C2   = component of C1 - N with the largest chromatic number
//   w_i  = smallest vertex of N with a neighbor in C2
//   Q    = recursive path in G[C2 + w_i] from w_i with bound chi_lb - 2
//   R    = P without its last vertex, followed by Q

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/chromatic.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// One non-base recursion level; all vertex ids refer to the top-level graph.
struct Theorem2Record {
    int depth = 0;
    Vertex start = -1;
    int chi_lb = 0;
    Color removed_color = 0;
    std::vector<Vertex> reduced_vertices; ///< V(G')
    std::vector<Vertex> c1;
    int c1_chi = 0;
    Path shortest;                        ///< P
    Vertex penultimate = -1;              ///< w
    std::vector<Vertex> w_neighbors;      ///< N(w) ∩ V(C1)
    std::vector<Vertex> c1_minus_neighbors; ///< V(G'')
    std::vector<Vertex> c2;
    int c2_chi = 0;
    Vertex bridge = -1;                   ///< w_i
    std::vector<Vertex> recursion_vertices; ///< V(G''')
    std::optional<int> recursion_chi;     ///< exact chi(G'''), strict mode only
    Path q;
    Path r;
};

struct Theorem2Trace {
    std::vector<Theorem2Record> records;
};

struct Theorem2Result {
    Path path;
    std::size_t color_count = 0;
    Theorem2Trace trace;
};

struct Theorem2Options {
    /// Recompute chi(G''') at every level and record it.
    bool strict = false;
};

inline int ceil_half(int x) { return x <= 0 ? 0 : (x + 1) / 2; }

namespace detail {

struct ComponentPick {
    std::vector<Vertex> vertices; ///< local ids
    int chi = 0;
};

// Component of g[within] with the largest exact chromatic number; ties keep
// the component with the smaller minimum id.
inline std::optional<ComponentPick> max_chi_component(const Graph &g, const VertexSet &within) {
    std::optional<ComponentPick> best;
    for (auto &comp : connected_components(g, within)) {
        const int chi = chromatic_number(induced_subgraph(g, std::span<const Vertex>(comp)).graph).chi;
        if (!best || chi > best->chi) best = ComponentPick{std::move(comp), chi};
    }
    return best;
}

class Theorem2Builder {
public:
    Theorem2Builder(const Theorem2Options &opts, Theorem2Trace &trace) : opts_(opts), trace_(trace) {}

    Path run(const ColoredGraph &cg, const std::vector<Vertex> &to_root, Vertex v, int chi_lb, int depth) {
        if (chi_lb <= 2) return Path{{to_root[v]}};
        const auto &g = cg.graph();
        auto lift = [&](const std::vector<Vertex> &local) {
            std::vector<Vertex> out;
            for (auto x : local) out.push_back(to_root[x]);
            return out;
        };

        const std::size_t slot = trace_.records.size();
        trace_.records.emplace_back();
        Theorem2Record rec;
        rec.depth = depth;
        rec.start = to_root[v];
        rec.chi_lb = chi_lb;
        rec.removed_color = cg.color(v);

        VertexSet reduced(g.vertex_count());
        for (std::size_t u = 0; u < g.vertex_count(); ++u)
            if (cg.color(static_cast<Vertex>(u)) != rec.removed_color) reduced.insert(static_cast<Vertex>(u));
        rec.reduced_vertices = lift(reduced.to_vector());

        auto c1 = max_chi_component(g, reduced);
        if (!c1) throw std::logic_error("chromatic lower bound exceeds the chromatic number");
        rec.c1 = lift(c1->vertices);
        rec.c1_chi = c1->chi;
        const auto c1_set = VertexSet::from_range(g.vertex_count(), c1->vertices);

        const Path p = shortest_path_to_set(g, v, c1_set);
        rec.shortest.vertices = lift(p.vertices);
        const Vertex w = p.vertices[p.order() - 2];
        rec.penultimate = to_root[w];

        const auto w_nb = g.neighbors(w) & c1_set;
        rec.w_neighbors = lift(w_nb.to_vector());
        const auto rest = c1_set - w_nb;
        rec.c1_minus_neighbors = lift(rest.to_vector());

        auto c2 = max_chi_component(g, rest);
        if (!c2) throw std::logic_error("chromatic lower bound exceeds the chromatic number");
        rec.c2 = lift(c2->vertices);
        rec.c2_chi = c2->chi;
        const auto c2_set = VertexSet::from_range(g.vertex_count(), c2->vertices);

        Vertex bridge = -1;
        w_nb.for_each([&](Vertex x) {
            if (bridge < 0 && g.neighbors(x).intersects(c2_set)) bridge = x;
        });
        if (bridge < 0) throw std::logic_error("no neighbor of w reaches the chosen component");
        rec.bridge = to_root[bridge];

        auto next_members = c2->vertices;
        next_members.push_back(bridge);
        const auto sub = induced_subgraph(g, std::span<const Vertex>(next_members));
        rec.recursion_vertices = lift(sub.to_parent);
        if (opts_.strict) rec.recursion_chi = chromatic_number(sub.graph).chi;
        std::vector<Vertex> sub_to_root;
        for (auto x : sub.to_parent) sub_to_root.push_back(to_root[x]);

        const Path q = run(induced_colored_subgraph(cg, sub), sub_to_root, sub.local(bridge), chi_lb - 2, depth + 1);
        rec.q = q;
        rec.r.vertices.assign(rec.shortest.vertices.begin(), rec.shortest.vertices.end() - 1);
        rec.r.vertices.insert(rec.r.vertices.end(), q.vertices.begin(), q.vertices.end());
        const Path r = rec.r;
        trace_.records[slot] = std::move(rec);
        return r;
    }

private:
    const Theorem2Options &opts_;
    Theorem2Trace &trace_;
};

} // namespace detail

/// Throws std::invalid_argument when the graph is not connected or not
/// triangle-free, v is not a vertex, or chi_lb exceeds the DSATUR upper bound.
inline Theorem2Result theorem2_colorful_path(const ColoredGraph &cg, Vertex v, int chi_lb,
                                             const Theorem2Options &opts = {}) {
    const auto &g = cg.graph();
    if (!g.contains(v)) throw std::invalid_argument("start vertex is not in the graph");
    if (!is_triangle_free(g)) throw std::invalid_argument("graph is not triangle-free");
    if (!is_connected(g)) throw std::invalid_argument("graph is not connected");
    const auto upper = dsatur_coloring(g).palette_size();
    if (chi_lb > static_cast<int>(upper))
        throw std::invalid_argument("chromatic lower bound " + std::to_string(chi_lb) +
                                    " exceeds the verified upper bound " + std::to_string(upper));

    Theorem2Result out;
    std::vector<Vertex> identity(g.vertex_count());
    for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<Vertex>(i);
    detail::Theorem2Builder builder(opts, out.trace);
    out.path = builder.run(cg, identity, v, chi_lb, 0);
    out.color_count = classify_path(cg, out.path).color_count;
    return out;
}

/// Violated output or per-record invariants, empty when all hold.
inline std::vector<std::string> check_theorem2(const ColoredGraph &cg, Vertex v, int chi_lb,
                                               const Theorem2Result &res) {
    std::vector<std::string> bad;
    const auto &g = cg.graph();
    if (!is_path(g, res.path.vertices)) {
        bad.emplace_back("R is not a path");
        return bad;
    }
    const auto report = classify_path(cg, res.path);
    if (!report.is_induced) bad.emplace_back("R is not induced");
    if (res.path.front() != v) bad.emplace_back("R does not start at v");
    if (static_cast<int>(report.color_count) < ceil_half(chi_lb)) bad.emplace_back("R sees too few colors");

    for (const auto &rec : res.trace.records) {
        const auto tag = "level " + std::to_string(rec.depth) + ": ";
        for (auto u : rec.reduced_vertices)
            if (cg.color(u) == rec.removed_color) bad.push_back(tag + "G' keeps a vertex of the removed color");
        for (std::size_t a = 0; a < rec.w_neighbors.size(); ++a)
            for (std::size_t b = a + 1; b < rec.w_neighbors.size(); ++b)
                if (g.adjacent(rec.w_neighbors[a], rec.w_neighbors[b]))
                    bad.push_back(tag + "neighbors of w are not independent");
        for (auto u : rec.q.vertices)
            if (cg.color(u) == rec.removed_color) bad.push_back(tag + "Q contains the removed color");
        if (rec.shortest.order() < 2 || rec.shortest.vertices[rec.shortest.order() - 2] != rec.penultimate)
            bad.push_back(tag + "w is not the penultimate vertex of P");
        if (!is_path(g, rec.r.vertices) || !classify_path(cg, rec.r).is_induced)
            bad.push_back(tag + "R is not an induced path");
        if (rec.recursion_chi && *rec.recursion_chi < rec.chi_lb - 2)
            bad.push_back(tag + "chi(G''') is below the passed-down bound");
    }
    return bad;
}

} // namespace rainbow

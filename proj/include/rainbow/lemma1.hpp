#pragma once

// Gradings and the rainbow-path-or-witness procedure.
//
// Given a colored graph, a k-colorable grading (W_1, ..., W_n) and s >= 3, the
// procedure returns either an induced rainbow path on s vertices, or a vertex
// v with s pairwise distinct-colored neighbors that are all later than v.
// Outline:
//   1. refine the grading into classes Z_1..Z_k (class j collects color j of
//      every part coloring);
//   2. pick the class with the largest chromatic number;
//   3. orient its edges from lower to higher color (acyclic, every directed
//      path rainbow);
//   4. order its vertices by part index, then id;
//   5. split arcs into forward and backward with respect to that order;
//   6. take longest directed paths P1 (forward) and P2 (backward);
//   7. look for a witness among out-neighbors inside V(P1), in-neighbors
//      inside V(P2);
//   8. otherwise BFS inside V(P1) (V(P2)) and read an s-vertex path off the
//      BFS tree, verified and backed by exhaustive search.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/chromatic.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

class InvalidGrading : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Ordered partition (W_1, ..., W_n) of the vertex set. part_colorings[i][t]
/// is the color of parts[i][t] in a proper coloring of G[W_i]; colors lie in 1..k.
struct Grading {
    std::vector<std::vector<Vertex>> parts;
    std::vector<std::vector<Color>> part_colorings;
    int k = 0;

    /// Part index per vertex (0-based). Throws InvalidGrading when the parts
    /// do not partition the vertex set of g.
    std::vector<int> part_index(const Graph &g) const {
        std::vector<int> index(g.vertex_count(), -1);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (auto v : parts[i]) {
                if (!g.contains(v)) throw InvalidGrading("grading part contains unknown vertex " + std::to_string(v));
                if (index[v] >= 0) throw InvalidGrading("vertex " + std::to_string(v) + " appears in two parts");
                index[v] = static_cast<int>(i);
            }
        for (std::size_t v = 0; v < index.size(); ++v)
            if (index[v] < 0) throw InvalidGrading("vertex " + std::to_string(v) + " is in no part");
        return index;
    }

    void validate(const Graph &g) const {
        if (k < 1) throw InvalidGrading("grading needs k >= 1");
        if (part_colorings.size() != parts.size()) throw InvalidGrading("one coloring per part is required");
        part_index(g);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (part_colorings[i].size() != parts[i].size())
                throw InvalidGrading("part " + std::to_string(i + 1) + " coloring has the wrong length");
            for (std::size_t a = 0; a < parts[i].size(); ++a) {
                const auto ca = part_colorings[i][a];
                if (ca < 1 || ca > k)
                    throw InvalidGrading("part " + std::to_string(i + 1) + " uses color " + std::to_string(ca) +
                                         " outside 1.." + std::to_string(k));
                for (std::size_t b = a + 1; b < parts[i].size(); ++b)
                    if (ca == part_colorings[i][b] && g.adjacent(parts[i][a], parts[i][b]))
                        throw InvalidGrading("part " + std::to_string(i + 1) + " coloring is not proper");
            }
        }
    }
};

/// u is later than v: u's part index is strictly larger.
inline bool later_than(const std::vector<int> &part_of, Vertex u, Vertex v) { return part_of[u] > part_of[v]; }

struct ColorClassPartition {
    /// classes[j] is Z_{j+1}, ascending ids.
    std::vector<std::vector<Vertex>> classes;
    /// origin[v] = (part index, class index), both 0-based.
    std::vector<std::pair<int, int>> origin;
};

inline ColorClassPartition refine_grading(const ColoredGraph &cg, const Grading &gr) {
    gr.validate(cg.graph());
    ColorClassPartition out;
    out.classes.resize(static_cast<std::size_t>(gr.k));
    out.origin.assign(cg.graph().vertex_count(), {-1, -1});
    for (std::size_t i = 0; i < gr.parts.size(); ++i)
        for (std::size_t t = 0; t < gr.parts[i].size(); ++t) {
            const auto v = gr.parts[i][t];
            const int j = gr.part_colorings[i][t] - 1;
            out.classes[j].push_back(v);
            out.origin[v] = {static_cast<int>(i), j};
        }
    for (auto &z : out.classes) std::sort(z.begin(), z.end());
    return out;
}

enum class PreconditionStatus { Unverified, False, True };

struct BfsRecord {
    Vertex root = -1;
    int depth = 0;
    /// Root-to-level-(s-1) chain read off the BFS tree (empty when depth < s-1).
    Path parent_path;
    bool parent_path_valid = false;
    bool used_fallback = false;
    Path fallback_path;
};

struct Lemma1Trace {
    int s = 0;
    BigInt r;
    PreconditionStatus precondition = PreconditionStatus::Unverified;
    ColorClassPartition partition;
    std::vector<int> class_chromatic_numbers;
    int chosen_class = -1; ///< 0-based
    std::vector<Vertex> class_vertices;
    std::vector<Edge> arcs; ///< (tail, head) with color(tail) < color(head)
    std::vector<Vertex> pi_order;
    std::vector<Edge> forward_arcs;
    std::vector<Edge> backward_arcs;
    Path forward_path;  ///< P1: x_1 -> ... -> x_l1 along forward arcs
    Path backward_path; ///< P2: y_1 -> ... -> y_l2 along backward arcs
    std::optional<BfsRecord> forward_bfs;
    std::optional<BfsRecord> backward_bfs;
    bool global_scan_run = false;
    std::optional<std::pair<Vertex, std::vector<Vertex>>> global_witness;
};

struct Lemma1Outcome {
    enum class Variant { RainbowPath, Witness, NoGuarantee };

    Variant variant = Variant::NoGuarantee;
    Path rainbow_path;
    Vertex witness_vertex = -1;
    std::vector<Vertex> witness_set;
    Lemma1Trace trace;
};

inline const char *to_string(Lemma1Outcome::Variant v) {
    switch (v) {
    case Lemma1Outcome::Variant::RainbowPath: return "rainbow-path";
    case Lemma1Outcome::Variant::Witness: return "witness";
    case Lemma1Outcome::Variant::NoGuarantee: return "no-guarantee";
    }
    return "?";
}

inline const char *to_string(PreconditionStatus p) {
    switch (p) {
    case PreconditionStatus::Unverified: return "unverified";
    case PreconditionStatus::False: return "false";
    case PreconditionStatus::True: return "true";
    }
    return "?";
}

struct Lemma1Options {
    /// Also scan every vertex of G for a later, distinct-colored neighborhood
    /// of size s. The result is recorded in the trace and returned as a
    /// Witness when the path-restricted steps produce nothing.
    bool global_witness_scan = false;
};

namespace detail {

// Longest path in a digraph whose arcs strictly increase color. Ties: smaller
// predecessor id, then smaller end id.
inline Path longest_color_increasing_path(const ColoredGraph &cg, const std::vector<Vertex> &vertices,
                                          const std::vector<Edge> &arcs) {
    if (vertices.empty()) return {};
    std::map<Vertex, std::vector<Vertex>> in;
    for (const auto &[u, v] : arcs) in[v].push_back(u);
    auto order = vertices;
    std::sort(order.begin(), order.end());
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return cg.color(a) < cg.color(b); });
    std::map<Vertex, int> length;
    std::map<Vertex, Vertex> pred;
    for (auto v : order) {
        length[v] = 1;
        pred[v] = -1;
        auto tails = in[v];
        std::sort(tails.begin(), tails.end());
        for (auto u : tails)
            if (length[u] + 1 > length[v]) {
                length[v] = length[u] + 1;
                pred[v] = u;
            }
    }
    Vertex end = -1;
    for (auto v : vertices)
        if (end < 0 || length[v] > length[end] || (length[v] == length[end] && v < end)) end = v;
    Path p;
    for (Vertex cur = end; cur != -1; cur = pred[cur]) p.vertices.push_back(cur);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

// Neighbors of `v` in `within` reachable along the arc direction.
inline std::vector<Vertex> arc_neighbors(const std::vector<Edge> &arcs, Vertex v, const std::set<Vertex> &within,
                                         bool outgoing) {
    std::vector<Vertex> out;
    for (const auto &[a, b] : arcs) {
        if (outgoing && a == v && within.count(b)) out.push_back(b);
        if (!outgoing && b == v && within.count(a)) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::optional<Path> bfs_branch(const ColoredGraph &cg, const std::vector<Edge> &arcs, const Path &dir_path,
                                      Vertex root, bool outgoing, int s, BfsRecord &rec) {
    const std::set<Vertex> within(dir_path.vertices.begin(), dir_path.vertices.end());
    rec.root = root;
    std::map<Vertex, Vertex> parent{{root, -1}};
    std::map<Vertex, int> level{{root, 0}};
    std::deque<Vertex> queue{root};
    Vertex target = -1;
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop_front();
        rec.depth = std::max(rec.depth, level[u]);
        if (target < 0 && level[u] == s - 1) target = u;
        for (auto x : arc_neighbors(arcs, u, within, outgoing)) {
            if (level.count(x)) continue;
            level[x] = level[u] + 1;
            parent[x] = u;
            queue.push_back(x);
        }
    }
    if (rec.depth < s - 1) return std::nullopt;

    for (Vertex cur = target; cur != -1; cur = parent[cur]) rec.parent_path.vertices.push_back(cur);
    std::reverse(rec.parent_path.vertices.begin(), rec.parent_path.vertices.end());
    const auto report = classify_path(cg, rec.parent_path);
    rec.parent_path_valid = report.is_induced && report.is_rainbow && report.order == static_cast<std::size_t>(s);
    if (rec.parent_path_valid) return rec.parent_path;

    rec.used_fallback = true;
    const auto sub = induced_subgraph(cg.graph(), std::span<const Vertex>(dir_path.vertices));
    SearchBudget budget;
    budget.max_vertices = 64;
    const auto found = longest_induced_path(sub.graph, budget);
    if (found.path.order() < static_cast<std::size_t>(s)) return std::nullopt;
    Path prefix{{found.path.vertices.begin(), found.path.vertices.begin() + s}};
    rec.fallback_path = sub.lift(prefix);
    return rec.fallback_path;
}

inline std::optional<std::pair<Vertex, std::vector<Vertex>>>
scan_for_witness(const ColoredGraph &cg, const std::vector<int> &part_of, int s) {
    const auto &g = cg.graph();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::set<Color> colors;
        std::vector<Vertex> picked;
        g.neighbors(static_cast<Vertex>(v)).for_each([&](Vertex u) {
            if (static_cast<int>(picked.size()) == s) return;
            if (!later_than(part_of, u, static_cast<Vertex>(v))) return;
            if (colors.insert(cg.color(u)).second) picked.push_back(u);
        });
        if (static_cast<int>(picked.size()) == s) return std::make_pair(static_cast<Vertex>(v), picked);
    }
    return std::nullopt;
}

} // namespace detail

/// Throws InvalidGrading for an invalid grading and std::invalid_argument for s < 3.
inline Lemma1Outcome lemma1_procedure(const ColoredGraph &cg, const Grading &gr, int s, const Lemma1Options &opts = {}) {
    if (s < 3) throw std::invalid_argument("s must be at least 3");
    const auto &g = cg.graph();
    Lemma1Outcome out;
    auto &tr = out.trace;
    tr.s = s;
    tr.r = compute_bounds(s).r;
    tr.precondition = BigInt(g.vertex_count()) < BigInt(gr.k) * tr.r ? PreconditionStatus::False
                                                                       : PreconditionStatus::Unverified;

    // (1) refinement into Z_1..Z_k
    tr.partition = refine_grading(cg, gr);
    const auto part_of = gr.part_index(g);

    // (2) class of maximum chromatic number, smallest index on ties
    for (const auto &z : tr.partition.classes) {
        const auto sub = induced_subgraph(g, std::span<const Vertex>(z));
        tr.class_chromatic_numbers.push_back(chromatic_number(sub.graph).chi);
    }
    tr.chosen_class = static_cast<int>(
        std::max_element(tr.class_chromatic_numbers.begin(), tr.class_chromatic_numbers.end()) -
        tr.class_chromatic_numbers.begin());
    tr.class_vertices = tr.partition.classes[tr.chosen_class];
    const std::set<Vertex> zset(tr.class_vertices.begin(), tr.class_vertices.end());

    // (3) orientation low -> high color
    for (auto u : tr.class_vertices)
        g.neighbors(u).for_each([&](Vertex v) {
            if (zset.count(v) && cg.color(u) < cg.color(v)) tr.arcs.emplace_back(u, v);
        });

    // (4) order by grading part, then id
    tr.pi_order = tr.class_vertices;
    std::stable_sort(tr.pi_order.begin(), tr.pi_order.end(),
                     [&](Vertex a, Vertex b) { return part_of[a] < part_of[b]; });
    std::map<Vertex, std::size_t> position;
    for (std::size_t i = 0; i < tr.pi_order.size(); ++i) position[tr.pi_order[i]] = i;

    // (5) forward / backward split
    for (const auto &arc : tr.arcs)
        (position[arc.first] < position[arc.second] ? tr.forward_arcs : tr.backward_arcs).push_back(arc);

    // (6) longest directed paths
    tr.forward_path = detail::longest_color_increasing_path(cg, tr.class_vertices, tr.forward_arcs);
    tr.backward_path = detail::longest_color_increasing_path(cg, tr.class_vertices, tr.backward_arcs);

    if (opts.global_witness_scan) {
        tr.global_scan_run = true;
        tr.global_witness = detail::scan_for_witness(cg, part_of, s);
    }
    if (tr.class_vertices.empty()) return out;

    // (7) witness inside X (out-neighbors) or Y (in-neighbors)
    auto try_witness = [&](const Path &p, const std::vector<Edge> &arcs, bool outgoing) {
        const std::set<Vertex> within(p.vertices.begin(), p.vertices.end());
        for (auto v : p.vertices) {
            auto nb = detail::arc_neighbors(arcs, v, within, outgoing);
            if (static_cast<int>(nb.size()) >= s) {
                out.variant = Lemma1Outcome::Variant::Witness;
                out.witness_vertex = v;
                out.witness_set.assign(nb.begin(), nb.begin() + s);
                return true;
            }
        }
        return false;
    };
    if (try_witness(tr.forward_path, tr.forward_arcs, true)) return out;
    if (try_witness(tr.backward_path, tr.backward_arcs, false)) return out;

    // (8) BFS from x_1 along out-arcs, then from y_l2 along in-arcs
    tr.forward_bfs.emplace();
    if (auto p = detail::bfs_branch(cg, tr.forward_arcs, tr.forward_path, tr.forward_path.front(), true, s,
                                    *tr.forward_bfs)) {
        out.variant = Lemma1Outcome::Variant::RainbowPath;
        out.rainbow_path = *p;
        return out;
    }
    tr.backward_bfs.emplace();
    if (auto p = detail::bfs_branch(cg, tr.backward_arcs, tr.backward_path, tr.backward_path.back(), false, s,
                                    *tr.backward_bfs)) {
        out.variant = Lemma1Outcome::Variant::RainbowPath;
        out.rainbow_path = *p;
        return out;
    }

    if (tr.global_witness) {
        out.variant = Lemma1Outcome::Variant::Witness;
        out.witness_vertex = tr.global_witness->first;
        out.witness_set = tr.global_witness->second;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verifiers
// ---------------------------------------------------------------------------

inline bool verify_rainbow_path(const ColoredGraph &cg, const Path &p, int s) {
    if (!is_path(cg.graph(), p.vertices)) return false;
    const auto r = classify_path(cg, p);
    return r.is_induced && r.is_rainbow && r.order == static_cast<std::size_t>(s);
}

/// s distinct vertices, all adjacent to v, all later than v, pairwise distinct colors.
inline bool verify_witness(const ColoredGraph &cg, const Grading &gr, Vertex v, const std::vector<Vertex> &set, int s) {
    const auto &g = cg.graph();
    if (!g.contains(v) || static_cast<int>(set.size()) != s) return false;
    const auto part_of = gr.part_index(g);
    std::set<Vertex> seen;
    std::set<Color> colors;
    for (auto u : set) {
        if (!g.contains(u) || !seen.insert(u).second) return false;
        if (!g.adjacent(u, v) || !later_than(part_of, u, v)) return false;
        if (!colors.insert(cg.color(u)).second) return false;
    }
    return true;
}

/// Violated trace invariants, empty when the trace is sound.
inline std::vector<std::string> check_lemma1_trace(const ColoredGraph &cg, const Grading &gr, const Lemma1Trace &tr) {
    std::vector<std::string> bad;
    const auto &g = cg.graph();
    const auto part_of = gr.part_index(g);

    // classes partition V and each Z_j ∩ W_i is independent
    std::vector<int> hits(g.vertex_count(), 0);
    for (std::size_t j = 0; j < tr.partition.classes.size(); ++j)
        for (auto v : tr.partition.classes[j]) {
            ++hits[v];
            for (auto u : tr.partition.classes[j])
                if (u < v && part_of[u] == part_of[v] && g.adjacent(u, v))
                    bad.push_back("class " + std::to_string(j + 1) + " is not independent inside a part");
        }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; }))
        bad.emplace_back("color classes do not partition the vertex set");

    // acyclicity: arcs increase color, and Kahn's algorithm consumes every vertex
    std::map<Vertex, int> indeg;
    std::map<Vertex, std::vector<Vertex>> outs;
    for (auto v : tr.class_vertices) indeg[v] = 0;
    for (const auto &[u, v] : tr.arcs) {
        if (!(cg.color(u) < cg.color(v))) bad.emplace_back("arc does not increase color");
        if (!g.adjacent(u, v)) bad.emplace_back("arc is not an edge");
        ++indeg[v];
        outs[u].push_back(v);
    }
    std::deque<Vertex> ready;
    for (const auto &[v, d] : indeg)
        if (d == 0) ready.push_back(v);
    std::size_t consumed = 0;
    while (!ready.empty()) {
        const auto u = ready.front();
        ready.pop_front();
        ++consumed;
        for (auto v : outs[u])
            if (--indeg[v] == 0) ready.push_back(v);
    }
    if (consumed != tr.class_vertices.size()) bad.emplace_back("oriented class graph has a cycle");

    // forward ⊎ backward = arcs, with grading direction
    std::multiset<Edge> all(tr.arcs.begin(), tr.arcs.end()), split;
    for (const auto &[u, v] : tr.forward_arcs) {
        split.insert({u, v});
        if (!(part_of[u] < part_of[v])) bad.emplace_back("forward arc does not go to a strictly later part");
    }
    for (const auto &[u, v] : tr.backward_arcs) {
        split.insert({u, v});
        if (!(part_of[u] > part_of[v])) bad.emplace_back("backward arc does not go to a strictly earlier part");
    }
    if (all != split) bad.emplace_back("forward and backward arcs do not split the orientation");

    // P1 / P2 are directed paths; their vertex sets are rainbow
    auto check_dir_path = [&](const Path &p, const std::vector<Edge> &arcs, const char *name) {
        const std::set<Edge> arcset(arcs.begin(), arcs.end());
        for (std::size_t i = 1; i < p.order(); ++i)
            if (!arcset.count({p.vertices[i - 1], p.vertices[i]}))
                bad.push_back(std::string(name) + " is not a directed path");
        std::set<Color> colors;
        for (auto v : p.vertices) colors.insert(cg.color(v));
        if (colors.size() != p.order()) bad.push_back(std::string(name) + " vertex set is not rainbow");
    };
    check_dir_path(tr.forward_path, tr.forward_arcs, "P1");
    check_dir_path(tr.backward_path, tr.backward_arcs, "P2");
    return bad;
}

/// Verifier for the returned variant plus all trace invariants.
inline std::vector<std::string> check_lemma1_outcome(const ColoredGraph &cg, const Grading &gr, int s,
                                                     const Lemma1Outcome &out) {
    auto bad = check_lemma1_trace(cg, gr, out.trace);
    switch (out.variant) {
    case Lemma1Outcome::Variant::RainbowPath:
        if (!verify_rainbow_path(cg, out.rainbow_path, s)) bad.emplace_back("returned path fails the verifier");
        break;
    case Lemma1Outcome::Variant::Witness:
        if (!verify_witness(cg, gr, out.witness_vertex, out.witness_set, s))
            bad.emplace_back("returned witness fails the verifier");
        break;
    case Lemma1Outcome::Variant::NoGuarantee:
        if (out.trace.precondition == PreconditionStatus::True)
            bad.emplace_back("no outcome although the chromatic precondition holds");
        break;
    }
    return bad;
}

} // namespace rainbow

#pragma once

// Proper colorings: DSATUR, exact chromatic number, and enumeration of
// proper colorings up to renaming of colors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

class TooLargeForExact : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class LowerBoundKind { None, Clique, OddCycle };

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
    LowerBoundKind certificate_kind = LowerBoundKind::None;
    /// Clique vertices, or an odd cycle in traversal order.
    std::vector<Vertex> lower_bound_certificate;
};

/// Rename colors by order of first occurrence along increasing vertex id.
inline Coloring canonicalize(const Coloring &c) {
    std::map<Color, Color> rename;
    std::vector<Color> out;
    out.reserve(c.size());
    for (auto col : c.assignment()) {
        auto [it, inserted] = rename.try_emplace(col, static_cast<Color>(rename.size() + 1));
        out.push_back(it->second);
    }
    return Coloring(std::move(out));
}

inline bool is_canonical(const Coloring &c) { return canonicalize(c) == c; }

/// Saturation-degree greedy coloring. Ties: larger degree, then smaller id.
/// Each vertex takes the smallest color absent from its neighbors.
inline Coloring dsatur_coloring(const Graph &g) {
    const auto n = g.vertex_count();
    std::vector<Color> color(n, 0);
    std::vector<std::vector<bool>> seen(n);
    std::vector<std::size_t> saturation(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v]) continue;
            if (best < 0 || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && g.degree(static_cast<Vertex>(v)) > g.degree(best)))
                best = static_cast<Vertex>(v);
        }
        Color c = 1;
        while (static_cast<std::size_t>(c) < seen[best].size() && seen[best][c]) ++c;
        color[best] = c;
        g.neighbors(best).for_each([&](Vertex u) {
            if (color[u]) return;
            if (seen[u].size() <= static_cast<std::size_t>(c)) seen[u].resize(c + 1, false);
            if (!seen[u][c]) {
                seen[u][c] = true;
                ++saturation[u];
            }
        });
    }
    return Coloring(std::move(color));
}

namespace detail {

// Backtracking k-colorability over at most 64 vertices, DSATUR branching order,
// new colors introduced only as max_used + 1.
class KColorSolver {
public:
    KColorSolver(const Graph &g, int k) : g_(g), n_(g.vertex_count()), k_(k), color_(n_, 0) {
        for (std::size_t v = 0; v < n_; ++v) adj_.push_back(g.neighbors(static_cast<Vertex>(v)).word());
    }

    std::optional<Coloring> solve() {
        if (n_ == 0) return Coloring{};
        if (!search(0, 0)) return std::nullopt;
        return Coloring(color_);
    }

private:
    std::uint64_t forbidden(std::size_t v) const {
        std::uint64_t mask = 0;
        auto nb = adj_[v];
        while (nb) {
            const auto u = static_cast<std::size_t>(std::countr_zero(nb));
            nb &= nb - 1;
            if (color_[u]) mask |= std::uint64_t{1} << color_[u];
        }
        return mask;
    }

    bool search(std::size_t colored, int max_used) {
        if (colored == n_) return true;
        std::size_t pick = n_;
        int best_sat = -1;
        std::size_t best_deg = 0;
        std::uint64_t pick_forbidden = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v]) continue;
            const auto f = forbidden(v);
            const int sat = std::popcount(f);
            if (sat >= k_) return false;
            const auto deg = static_cast<std::size_t>(std::popcount(adj_[v]));
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = v;
                best_sat = sat;
                best_deg = deg;
                pick_forbidden = f;
            }
        }
        const int limit = std::min(k_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (pick_forbidden & (std::uint64_t{1} << c)) continue;
            color_[pick] = c;
            if (search(colored + 1, std::max(max_used, c))) return true;
            color_[pick] = 0;
        }
        return false;
    }

    const Graph &g_;
    std::size_t n_;
    int k_;
    std::vector<std::uint64_t> adj_;
    std::vector<Color> color_;
};

inline std::vector<Vertex> greedy_max_clique(const Graph &g) {
    std::vector<Vertex> best;
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        std::vector<Vertex> clique{static_cast<Vertex>(s)};
        auto candidates = g.neighbors(static_cast<Vertex>(s));
        while (!candidates.empty()) {
            Vertex pick = -1;
            std::size_t pick_deg = 0;
            candidates.for_each([&](Vertex v) {
                const auto d = (g.neighbors(v) & candidates).size();
                if (pick < 0 || d > pick_deg) {
                    pick = v;
                    pick_deg = d;
                }
            });
            clique.push_back(pick);
            candidates &= g.neighbors(pick);
        }
        if (clique.size() > best.size()) best = clique;
    }
    std::sort(best.begin(), best.end());
    return best;
}

} // namespace detail

/// An odd cycle in traversal order, or nullopt when g is bipartite.
inline std::optional<std::vector<Vertex>> find_odd_cycle(const Graph &g) {
    const auto n = g.vertex_count();
    std::vector<int> depth(n, -1);
    std::vector<Vertex> parent(n, -1);
    for (std::size_t root = 0; root < n; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::deque<Vertex> queue{static_cast<Vertex>(root)};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (auto w : g.neighbors(u).to_vector()) {
                if (depth[w] < 0) {
                    depth[w] = depth[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (depth[w] == depth[u]) {
                    std::vector<Vertex> left{u}, right{w};
                    while (left.back() != right.back()) {
                        left.push_back(parent[left.back()]);
                        right.push_back(parent[right.back()]);
                    }
                    right.pop_back();
                    left.insert(left.end(), right.rbegin(), right.rend());
                    return left;
                }
            }
        }
    }
    return std::nullopt;
}

/// Exact chromatic number with an optimal witness coloring (colors 1..chi).
/// The empty graph has chi = 0. Throws TooLargeForExact above `max_vertices`
/// (hard limit 64).
inline ChromaticResult chromatic_number(const Graph &g, std::size_t max_vertices = 64) {
    const auto n = g.vertex_count();
    if (n > std::min<std::size_t>(max_vertices, 64))
        throw TooLargeForExact("graph with " + std::to_string(n) + " vertices is too large for exact coloring (cap " +
                               std::to_string(std::min<std::size_t>(max_vertices, 64)) + ")");
    ChromaticResult result;
    if (n == 0) return result;

    int lower = 1;
    auto clique = detail::greedy_max_clique(g);
    if (clique.size() >= 2) {
        lower = static_cast<int>(clique.size());
        result.certificate_kind = LowerBoundKind::Clique;
        result.lower_bound_certificate = clique;
    }
    if (lower < 3) {
        if (auto cycle = find_odd_cycle(g)) {
            lower = 3;
            result.certificate_kind = LowerBoundKind::OddCycle;
            result.lower_bound_certificate = *cycle;
        }
    }

    auto upper = canonicalize(dsatur_coloring(g));
    const int upper_k = static_cast<int>(upper.palette_size());
    for (int k = lower; k < upper_k; ++k) {
        if (auto witness = detail::KColorSolver(g, k).solve()) {
            result.chi = k;
            result.witness = canonicalize(*witness);
            return result;
        }
    }
    result.chi = upper_k;
    result.witness = std::move(upper);
    return result;
}

/// Visits canonical proper colorings with at most `max_colors` colors in
/// lexicographic order of the vertex-id-ordered assignment. The visitor
/// returns false to stop. Returns the number of colorings visited.
inline std::size_t for_each_canonical_coloring(const Graph &g, int max_colors,
                                               const std::function<bool(const Coloring &)> &visit) {
    const auto n = g.vertex_count();
    if (max_colors < 0) return 0;
    if (max_colors > 63) throw std::invalid_argument("max_colors above 63 is not supported");
    std::vector<std::vector<Vertex>> nbrs(n);
    for (std::size_t v = 0; v < n; ++v) nbrs[v] = g.neighbors(static_cast<Vertex>(v)).to_vector();

    std::vector<Color> color(n, 0);
    // Count of colored neighbors holding each color, for forward checking.
    std::vector<std::vector<int>> hits(n, std::vector<int>(static_cast<std::size_t>(max_colors) + 1, 0));
    std::vector<int> blocked(n, 0);
    const auto full = max_colors;
    std::size_t visited = 0;
    bool stop = false;

    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int max_used) {
        if (stop) return;
        if (v == n) {
            ++visited;
            if (!visit(Coloring(color))) stop = true;
            return;
        }
        const int limit = std::min(max_colors, max_used + 1);
        for (int c = 1; c <= limit && !stop; ++c) {
            if (hits[v][c]) continue;
            color[v] = c;
            bool dead = false;
            for (auto u : nbrs[v]) {
                if (static_cast<std::size_t>(u) <= v) continue;
                if (hits[u][c]++ == 0 && ++blocked[u] >= full) dead = true;
            }
            if (!dead) rec(v + 1, std::max(max_used, c));
            for (auto u : nbrs[v]) {
                if (static_cast<std::size_t>(u) <= v) continue;
                if (--hits[u][c] == 0) --blocked[u];
            }
            color[v] = 0;
        }
    };
    if (n == 0) {
        visit(Coloring{});
        return 1;
    }
    rec(0, 0);
    return visited;
}

struct ColoringEnumeration {
    std::vector<Coloring> colorings;
    bool truncated = false;
};

/// First `cap` canonical proper colorings with at most `max_colors` colors.
/// `truncated` is set when at least one more exists.
inline ColoringEnumeration enumerate_colorings(const Graph &g, int max_colors, std::size_t cap) {
    ColoringEnumeration out;
    for_each_canonical_coloring(g, max_colors, [&](const Coloring &c) {
        if (out.colorings.size() == cap) {
            out.truncated = true;
            return false;
        }
        out.colorings.push_back(c);
        return true;
    });
    return out;
}

} // namespace rainbow

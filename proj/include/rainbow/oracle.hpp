#pragma once

// Exact searches used as ground truth: longest induced path, longest induced
// rainbow path, most colorful induced path from a fixed start, and the
// Gallai-Roy rainbow path obtained by orienting edges toward larger colors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchBudget {
    enum class OnExceed { Error, BestEffort };

    std::size_t max_vertices = 25;
    std::uint64_t max_nodes = 100'000'000;
    OnExceed on_exceed = OnExceed::Error;
};

struct SearchResult {
    Path path;
    bool exact = true;     ///< false when the node budget cut the search short
    std::uint64_t nodes = 0;
    std::size_t color_count = 0;
};

namespace detail {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

struct MaskGraph {
    std::size_t n = 0;
    std::vector<Mask> adj;
    Mask all = 0;

    explicit MaskGraph(const Graph &g) : n(g.vertex_count()) {
        for (std::size_t v = 0; v < n; ++v) adj.push_back(g.neighbors(static_cast<Vertex>(v)).word());
        all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    }
};

inline void check_budget_size(std::size_t n, const SearchBudget &b) {
    if (n > 64) throw BudgetExceeded("exact path search supports at most 64 vertices");
    if (n > b.max_vertices && b.on_exceed == SearchBudget::OnExceed::Error)
        throw BudgetExceeded("graph with " + std::to_string(n) + " vertices exceeds the search budget of " +
                             std::to_string(b.max_vertices));
}

// Colors remapped to bit positions 0..palette-1.
inline std::vector<Mask> color_bits(const ColoredGraph &cg) {
    std::map<Color, int> index;
    for (auto c : cg.coloring().palette()) index.emplace(c, static_cast<int>(index.size()));
    std::vector<Mask> out;
    for (auto c : cg.coloring().assignment()) out.push_back(Mask{1} << index.at(c));
    return out;
}

inline Mask colors_of(Mask set, const std::vector<Mask> &bit) {
    Mask out = 0;
    while (set) {
        out |= bit[static_cast<std::size_t>(std::countr_zero(set))];
        set &= set - 1;
    }
    return out;
}

// DFS over induced paths. `colored` switches on the rainbow restriction.
class InducedPathSearch {
public:
    InducedPathSearch(const Graph &g, const std::vector<Mask> *color_bit, const SearchBudget &budget)
        : g_(g), color_bit_(color_bit), budget_(budget) {}

    SearchResult run() {
        SearchResult out;
        for (std::size_t s = 0; s < g_.n && !aborted_; ++s) {
            path_.assign(1, static_cast<Vertex>(s));
            const Mask bit = Mask{1} << s;
            extend(bit, color_bit_ ? (*color_bit_)[s] : 0);
        }
        out.path.vertices = best_;
        out.exact = !aborted_;
        out.nodes = nodes_;
        out.color_count = best_.size();
        return out;
    }

private:
    // excluded = path vertices plus neighbors of all but the last path vertex.
    void extend(Mask excluded, Mask used_colors) {
        if (++nodes_ > budget_.max_nodes) {
            if (budget_.on_exceed == SearchBudget::OnExceed::Error)
                throw BudgetExceeded("search node budget exhausted");
            aborted_ = true;
            return;
        }
        const auto k = path_.size();
        if (k > best_.size() && (k == 1 || path_.back() > path_.front())) best_ = path_;

        const auto last = static_cast<std::size_t>(path_.back());
        const Mask near = g_.adj[last] & ~excluded;
        Mask far = g_.all & ~excluded & ~g_.adj[last];
        Mask candidates = near;
        if (color_bit_) {
            candidates &= ~same_color(near, used_colors);
            far &= ~same_color(far, used_colors);
        }
        std::size_t bound = k + (candidates ? 1 : 0) + static_cast<std::size_t>(popcount(far));
        if (color_bit_) {
            const Mask fresh = colors_of(candidates | far, *color_bit_) & ~used_colors;
            bound = std::min(bound, k + static_cast<std::size_t>(popcount(fresh)));
        }
        if (bound <= best_.size()) return;

        while (candidates && !aborted_) {
            const auto x = static_cast<std::size_t>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            path_.push_back(static_cast<Vertex>(x));
            extend(excluded | g_.adj[last] | (Mask{1} << x), used_colors | (color_bit_ ? (*color_bit_)[x] : 0));
            path_.pop_back();
        }
    }

    Mask same_color(Mask set, Mask used) const {
        Mask out = 0;
        Mask s = set;
        while (s) {
            const auto v = static_cast<std::size_t>(std::countr_zero(s));
            s &= s - 1;
            if ((*color_bit_)[v] & used) out |= Mask{1} << v;
        }
        return out;
    }

    MaskGraph g_;
    const std::vector<Mask> *color_bit_;
    SearchBudget budget_;
    std::vector<Vertex> path_, best_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace detail

/// Maximum-order induced path. The empty graph yields an empty path.
inline SearchResult longest_induced_path(const Graph &g, const SearchBudget &budget = {}) {
    detail::check_budget_size(g.vertex_count(), budget);
    return detail::InducedPathSearch(g, nullptr, budget).run();
}

/// Maximum-order induced path whose vertices carry pairwise distinct colors.
inline SearchResult longest_induced_rainbow_path(const ColoredGraph &cg, const SearchBudget &budget = {}) {
    detail::check_budget_size(cg.graph().vertex_count(), budget);
    const auto bits = detail::color_bits(cg);
    return detail::InducedPathSearch(cg.graph(), &bits, budget).run();
}

/// Induced path starting at v with the most distinct colors; ties go to the
/// shorter path, then the lexicographically smaller vertex sequence.
inline SearchResult max_colorful_induced_path_from(const ColoredGraph &cg, Vertex v, const SearchBudget &budget = {}) {
    using detail::Mask;
    const auto &graph = cg.graph();
    if (!graph.contains(v)) throw std::invalid_argument("start vertex is not in the graph");
    detail::check_budget_size(graph.vertex_count(), budget);
    const detail::MaskGraph g(graph);
    const auto bit = detail::color_bits(cg);

    std::vector<Vertex> path{v}, best;
    int best_colors = 0;
    std::uint64_t nodes = 0;
    bool aborted = false;

    auto rec = [&](auto &&self, Mask excluded, Mask used) -> void {
        if (++nodes > budget.max_nodes) {
            if (budget.on_exceed == SearchBudget::OnExceed::Error) throw BudgetExceeded("search node budget exhausted");
            aborted = true;
            return;
        }
        const int colors = detail::popcount(used);
        if (colors > best_colors || (colors == best_colors && path.size() < best.size())) {
            best = path;
            best_colors = colors;
        }
        const auto last = static_cast<std::size_t>(path.back());
        Mask candidates = g.adj[last] & ~excluded;
        const Mask reachable = g.all & ~excluded;
        const int bound = colors + detail::popcount(detail::colors_of(reachable, bit) & ~used);
        if (bound < best_colors || (bound == best_colors && path.size() >= best.size())) return;
        while (candidates && !aborted) {
            const auto x = static_cast<std::size_t>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            path.push_back(static_cast<Vertex>(x));
            self(self, excluded | g.adj[last] | (Mask{1} << x), used | bit[x]);
            path.pop_back();
        }
    };
    rec(rec, Mask{1} << v, bit[static_cast<std::size_t>(v)]);

    SearchResult out;
    out.path.vertices = best;
    out.exact = !aborted;
    out.nodes = nodes;
    out.color_count = static_cast<std::size_t>(best_colors);
    return out;
}

/// Orient every edge toward its larger-colored endpoint and return a longest
/// directed path of the resulting acyclic digraph. Colors strictly increase
/// along the result. Ties: smaller predecessor id, then smaller end id.
inline Path gallai_roy_rainbow_path(const ColoredGraph &cg) {
    const auto &g = cg.graph();
    const auto n = g.vertex_count();
    if (n == 0) return {};
    std::vector<Vertex> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<Vertex>(v);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return cg.color(a) < cg.color(b); });

    std::vector<int> length(n, 1);
    std::vector<Vertex> pred(n, -1);
    for (auto v : order)
        g.neighbors(v).for_each([&](Vertex u) {
            if (cg.color(u) >= cg.color(v)) return;
            if (length[u] + 1 > length[v]) {
                length[v] = length[u] + 1;
                pred[v] = u;
            }
        });
    Vertex end = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (length[v] > length[end]) end = static_cast<Vertex>(v);
    Path p;
    for (Vertex cur = end; cur != -1; cur = pred[cur]) p.vertices.push_back(cur);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
}

} // namespace rainbow

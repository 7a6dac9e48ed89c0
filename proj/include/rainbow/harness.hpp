#pragma once

// Conjecture-testing harness: for each triangle-free graph, sweep canonical
// proper colorings and check for an induced rainbow path on chi vertices,
// alongside the colorful-path construction and the Gallai-Roy path.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"

#include "rainbow/chromatic.hpp"
#include "rainbow/gen_io.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/theorem2.hpp"

namespace rainbow {

class NotTriangleFree : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct HarnessConfig {
    int max_colors_delta = 0;
    std::size_t coloring_cap = 1000;
    /// Extra random colorings drawn when enumeration hits the cap.
    std::size_t sample_count = 0;
    SearchBudget budget;
    std::size_t chromatic_cap = 64;
    std::size_t parallelism = 1;
    std::uint64_t seed = 0;
    /// Run the colorful-path construction from every vertex of the pivot component.
    bool thorough = false;
    bool abort_on_malformed = false;
};

struct CheckRecord {
    std::string digest;
    std::size_t rainbow_order = 0;
    std::size_t theorem2_colors = 0;
    std::size_t gallai_roy_order = 0;
};

struct ConjectureReport {
    std::string graph_id;
    std::string graph6;
    std::size_t n = 0;
    std::size_t m = 0;
    int chi = 0;
    std::size_t colorings_checked = 0;
    bool truncated = false;
    std::size_t sampled = 0;
    std::size_t min_rainbow_order_observed = 0;
    bool holds_for_all_checked = true;
    std::optional<Coloring> witness_coloring;
    std::size_t longest_induced_path_order = 0;
    std::vector<Vertex> theorem2_pivots;
    std::vector<CheckRecord> checks;
};

inline std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char ch : bytes) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ull;
    }
    return h;
}

/// 64-bit FNV-1a of the comma-joined assignment, as 16 hex digits.
inline std::string coloring_digest(const Coloring &c) {
    std::string joined;
    for (auto col : c.assignment()) {
        if (!joined.empty()) joined.push_back(',');
        joined += std::to_string(col);
    }
    const auto h = fnv1a(joined);
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace detail {

// Random proper coloring with at most max_colors colors: vertices in id order,
// colors tried in a random order, with backtracking.
inline std::optional<Coloring> random_proper_coloring(const Graph &g, int max_colors, std::mt19937_64 &rng) {
    const auto n = g.vertex_count();
    std::vector<Color> color(n, 0);
    std::uint64_t steps = 0;
    auto rec = [&](auto &&self, std::size_t v) -> bool {
        if (v == n) return true;
        if (++steps > 1'000'000) return false;
        std::vector<Color> order(static_cast<std::size_t>(max_colors));
        std::iota(order.begin(), order.end(), 1);
        for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
        for (auto c : order) {
            bool ok = true;
            g.neighbors(static_cast<Vertex>(v)).for_each([&](Vertex u) {
                if (color[u] == c) ok = false;
            });
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = 0;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return canonicalize(Coloring(color));
}

} // namespace detail

/// Throws NotTriangleFree, std::invalid_argument for the empty graph, and
/// TooLargeForExact / BudgetExceeded when the exact searches cannot run.
inline ConjectureReport check_graph(const Graph &g, const HarnessConfig &cfg, std::string graph_id = "graph") {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph has nothing to check");
    if (!is_triangle_free(g)) throw NotTriangleFree("graph contains a triangle");

    ConjectureReport rep;
    rep.graph_id = std::move(graph_id);
    rep.graph6 = encode_graph6(g);
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.chi = chromatic_number(g, cfg.chromatic_cap).chi;
    rep.longest_induced_path_order = longest_induced_path(g, cfg.budget).path.order();

    // The colorful-path construction needs a connected host whose chromatic
    // number equals chi(G): the first component attaining it.
    const auto comps = connected_components(g);
    std::optional<InducedSubgraph> pivot_host;
    for (const auto &comp : comps) {
        auto sub = induced_subgraph(g, std::span<const Vertex>(comp));
        if (chromatic_number(sub.graph, cfg.chromatic_cap).chi == rep.chi) {
            pivot_host = std::move(sub);
            break;
        }
    }
    if (cfg.thorough)
        rep.theorem2_pivots = pivot_host->to_parent;
    else
        rep.theorem2_pivots = {pivot_host->to_parent.front()};

    const int max_colors = rep.chi + cfg.max_colors_delta;
    auto enumeration = enumerate_colorings(g, max_colors, cfg.coloring_cap);
    rep.truncated = enumeration.truncated;
    auto colorings = std::move(enumeration.colorings);
    if (rep.truncated && cfg.sample_count > 0) {
        std::set<std::vector<Color>> seen;
        for (const auto &c : colorings) seen.insert(c.assignment());
        std::mt19937_64 rng(cfg.seed ^ fnv1a(rep.graph6));
        for (std::size_t attempt = 0; attempt < 4 * cfg.sample_count && rep.sampled < cfg.sample_count; ++attempt) {
            auto c = detail::random_proper_coloring(g, max_colors, rng);
            if (c && seen.insert(c->assignment()).second) {
                colorings.push_back(*c);
                ++rep.sampled;
            }
        }
    }

    rep.min_rainbow_order_observed = g.vertex_count();
    for (const auto &coloring : colorings) {
        const ColoredGraph cg(g, coloring);
        CheckRecord rec;
        rec.digest = coloring_digest(coloring);
        rec.rainbow_order = longest_induced_rainbow_path(cg, cfg.budget).path.order();
        rec.gallai_roy_order = gallai_roy_rainbow_path(cg).order();

        const auto host = induced_colored_subgraph(cg, *pivot_host);
        rec.theorem2_colors = g.vertex_count();
        for (auto v : rep.theorem2_pivots) {
            const auto res = theorem2_colorful_path(host, pivot_host->local(v), rep.chi);
            rec.theorem2_colors = std::min(rec.theorem2_colors, res.color_count);
        }

        rep.min_rainbow_order_observed = std::min(rep.min_rainbow_order_observed, rec.rainbow_order);
        if (rec.rainbow_order < static_cast<std::size_t>(rep.chi) && !rep.witness_coloring)
            rep.witness_coloring = coloring;
        rep.checks.push_back(std::move(rec));
    }
    rep.colorings_checked = rep.checks.size();
    rep.holds_for_all_checked = !rep.witness_coloring.has_value();
    return rep;
}

/// Violated report invariants, empty when the report is internally consistent.
inline std::vector<std::string> check_report_consistency(const ConjectureReport &rep) {
    std::vector<std::string> bad;
    const auto chi = static_cast<std::size_t>(rep.chi);
    if (rep.holds_for_all_checked != (rep.min_rainbow_order_observed >= chi))
        bad.emplace_back("holds flag disagrees with the minimum rainbow order");
    if (rep.witness_coloring.has_value() == rep.holds_for_all_checked)
        bad.emplace_back("witness coloring presence disagrees with the holds flag");
    if (rep.colorings_checked != rep.checks.size()) bad.emplace_back("check count mismatch");
    for (const auto &c : rep.checks) {
        if (c.gallai_roy_order < chi) bad.push_back("gallai-roy order below chi for " + c.digest);
        if (c.theorem2_colors < static_cast<std::size_t>(ceil_half(rep.chi)))
            bad.push_back("colorful path below ceil(chi/2) for " + c.digest);
        if (c.rainbow_order > rep.longest_induced_path_order)
            bad.push_back("rainbow order exceeds longest induced path for " + c.digest);
    }
    return bad;
}

inline nlohmann::ordered_json to_json(const ConjectureReport &rep) {
    nlohmann::ordered_json j;
    j["graph_id"] = rep.graph_id;
    j["graph6"] = rep.graph6;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["chi"] = rep.chi;
    j["colorings_checked"] = rep.colorings_checked;
    j["truncated"] = rep.truncated;
    j["sampled"] = rep.sampled;
    j["min_rainbow_order_observed"] = rep.min_rainbow_order_observed;
    j["holds_for_all_checked"] = rep.holds_for_all_checked;
    j["witness_coloring"] = rep.witness_coloring ? nlohmann::ordered_json(rep.witness_coloring->assignment())
                                                 : nlohmann::ordered_json(nullptr);
    j["longest_induced_path_order"] = rep.longest_induced_path_order;
    j["theorem2_pivots"] = rep.theorem2_pivots;
    auto checks = nlohmann::ordered_json::array();
    for (const auto &c : rep.checks) {
        nlohmann::ordered_json cj;
        cj["digest"] = c.digest;
        cj["rainbow_order"] = c.rainbow_order;
        cj["theorem2_colors"] = c.theorem2_colors;
        cj["gallai_roy_order"] = c.gallai_roy_order;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

struct CorpusSummary {
    std::size_t graphs_processed = 0;
    std::size_t checks_run = 0;
    std::size_t violations = 0;
    std::size_t skipped = 0;
    double wall_seconds = 0.0;
};

/// One JSON object per processed graph to `jsonl`, in corpus order; warnings
/// to `log`. Throws Graph6Error on a malformed line when cfg.abort_on_malformed.
inline CorpusSummary run_corpus(std::istream &corpus, std::ostream &jsonl, std::ostream &log,
                                const HarnessConfig &cfg) {
    const auto started = std::chrono::steady_clock::now();
    const auto lines = read_corpus(corpus);

    struct Slot {
        std::optional<std::string> json;
        std::string warning;
        std::size_t checks = 0;
        bool violation = false;
    };
    std::vector<Slot> slots(lines.size());

    auto process = [&](std::size_t i) {
        const auto &line = lines[i];
        auto &slot = slots[i];
        const auto where = "line " + std::to_string(line.line_number);
        Graph g;
        try {
            g = decode_graph6(line.text);
        } catch (const Graph6Error &e) {
            slot.warning = where + ": skipped malformed graph6 (" + e.what() + ")";
            return;
        }
        try {
            const auto rep = check_graph(g, cfg, "line-" + std::to_string(line.line_number));
            slot.json = to_json(rep).dump();
            slot.checks = rep.colorings_checked;
            slot.violation = !rep.holds_for_all_checked;
            if (slot.violation) slot.warning = where + ": CONJECTURE VIOLATION recorded for " + rep.graph6;
        } catch (const NotTriangleFree &) {
            slot.warning = where + ": skipped " + line.text + " (not triangle-free)";
        } catch (const std::exception &e) {
            slot.warning = where + ": skipped " + line.text + " (" + e.what() + ")";
        }
    };

    if (cfg.abort_on_malformed)
        for (const auto &line : lines) decode_graph6(line.text);

    const auto width = std::max<std::size_t>(1, std::min(cfg.parallelism, lines.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t + 1 < width; ++t)
        workers.emplace_back([&] {
            for (std::size_t i; (i = next++) < lines.size();) process(i);
        });
    for (std::size_t i; (i = next++) < lines.size();) process(i);
    for (auto &w : workers) w.join();

    CorpusSummary sum;
    for (auto &slot : slots) {
        if (!slot.warning.empty()) log << "warning: " << slot.warning << '\n';
        if (slot.json) {
            jsonl << *slot.json << '\n';
            ++sum.graphs_processed;
            sum.checks_run += slot.checks;
            if (slot.violation) ++sum.violations;
        } else {
            ++sum.skipped;
        }
    }
    sum.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return sum;
}

inline CorpusSummary run_corpus(const std::string &corpus_path, const std::string &out_path, std::ostream &log,
                                const HarnessConfig &cfg) {
    std::ifstream in(corpus_path);
    if (!in) throw std::runtime_error("cannot read corpus file " + corpus_path);
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write report file " + out_path);
    return run_corpus(in, out, log, cfg);
}

} // namespace rainbow

#pragma once

// Plain-text renderings of procedure traces and bound tables, one record per
// line or step.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/bounds.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/lemma1.hpp"
#include "rainbow/theorem2.hpp"

namespace rainbow {

inline std::string join(const std::vector<Vertex> &vs, const char *sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(vs[i]);
    }
    return out;
}

inline std::string format_path(const Path &p) { return p.empty() ? "()" : join(p.vertices, "-"); }

inline std::string format_arcs(const std::vector<Edge> &arcs) {
    std::string out;
    for (const auto &[u, v] : arcs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(u) + ">" + std::to_string(v);
    }
    return out;
}

inline void write_bounds(std::ostream &os, const BoundsParameters &b) {
    os << "s=" << b.s << " r=" << b.r << " c=" << b.c << '\n';
    for (int j = b.s; j >= 1; --j) os << "  w_" << j << " = " << b.w_at(j) << '\n';
}

inline void write_trace(std::ostream &os, const Lemma1Outcome &out) {
    const auto &t = out.trace;
    os << "step 0: s=" << t.s << " r=" << t.r << " precondition chi>=k*r: " << to_string(t.precondition) << '\n';
    for (std::size_t j = 0; j < t.partition.classes.size(); ++j)
        os << "step 1: Z_" << j + 1 << " = {" << join(t.partition.classes[j]) << "}\n";
    os << "step 2: class chromatic numbers:";
    for (auto c : t.class_chromatic_numbers) os << ' ' << c;
    os << "; chosen Z_" << t.chosen_class + 1 << '\n';
    os << "step 3: arcs " << format_arcs(t.arcs) << '\n';
    os << "step 4: order " << join(t.pi_order) << '\n';
    os << "step 5: forward " << format_arcs(t.forward_arcs) << " | backward " << format_arcs(t.backward_arcs) << '\n';
    os << "step 6: P1 = " << format_path(t.forward_path) << " (l1=" << t.forward_path.order() << "), P2 = "
       << format_path(t.backward_path) << " (l2=" << t.backward_path.order() << ")\n";
    auto bfs = [&](const char *name, const std::optional<BfsRecord> &b) {
        if (!b) return;
        os << "step 8: " << name << " BFS root " << b->root << " depth " << b->depth;
        if (!b->parent_path.empty())
            os << ", tree path " << format_path(b->parent_path) << (b->parent_path_valid ? " (verified)" : " (rejected)");
        if (b->used_fallback) os << ", exhaustive fallback " << format_path(b->fallback_path);
        os << '\n';
    };
    bfs("forward", t.forward_bfs);
    bfs("backward", t.backward_bfs);
    if (t.global_scan_run) {
        os << "diagnostic: global witness scan ";
        if (t.global_witness)
            os << "found " << t.global_witness->first << " -> {" << join(t.global_witness->second) << "}\n";
        else
            os << "found nothing\n";
    }
    os << "outcome: " << to_string(out.variant);
    if (out.variant == Lemma1Outcome::Variant::RainbowPath) os << ' ' << format_path(out.rainbow_path);
    if (out.variant == Lemma1Outcome::Variant::Witness)
        os << " vertex " << out.witness_vertex << " later neighbors {" << join(out.witness_set) << "}";
    os << '\n';
}

inline void write_trace(std::ostream &os, const Theorem2Trace &t) {
    for (const auto &r : t.records) {
        os << "level " << r.depth << ": start " << r.start << " chi_lb " << r.chi_lb << " removed color "
           << r.removed_color << '\n';
        os << "  G'   = {" << join(r.reduced_vertices) << "}\n";
        os << "  C1   = {" << join(r.c1) << "} chi " << r.c1_chi << '\n';
        os << "  P    = " << format_path(r.shortest) << ", w = " << r.penultimate << '\n';
        os << "  N(w) & C1 = {" << join(r.w_neighbors) << "}\n";
        os << "  G''  = {" << join(r.c1_minus_neighbors) << "}\n";
        os << "  C2   = {" << join(r.c2) << "} chi " << r.c2_chi << '\n';
        os << "  w_i  = " << r.bridge << ", G''' = {" << join(r.recursion_vertices) << "}";
        if (r.recursion_chi) os << " chi " << *r.recursion_chi;
        os << '\n';
        os << "  Q    = " << format_path(r.q) << '\n';
        os << "  R    = " << format_path(r.r) << '\n';
    }
}

} // namespace rainbow

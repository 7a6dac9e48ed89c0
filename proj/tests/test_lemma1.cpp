#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "rainbow/gen_io.hpp"
#include "rainbow/lemma1.hpp"
#include "support/brute_force.hpp"

using namespace rainbow;

namespace {

Grading singleton_grading(std::size_t n) {
    Grading gr;
    gr.k = 1;
    for (std::size_t v = 0; v < n; ++v) {
        gr.parts.push_back({static_cast<Vertex>(v)});
        gr.part_colorings.push_back({1});
    }
    return gr;
}

// Random ordered partition into up to `parts` blocks, each block colored
// greedily with colors 1..k; k grows until every block fits.
Grading random_grading(const Graph &g, std::size_t parts, std::mt19937_64 &rng) {
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<Vertex>> blocks(parts);
    for (auto v : order) blocks[rng() % parts].push_back(v);
    Grading gr;
    for (auto &b : blocks) {
        if (b.empty()) continue;
        std::sort(b.begin(), b.end());
        const auto sub = induced_subgraph(g, std::span<const Vertex>(b));
        const auto c = dsatur_coloring(sub.graph);
        gr.parts.push_back(b);
        gr.part_colorings.push_back(c.assignment());
        gr.k = std::max(gr.k, static_cast<int>(c.palette_size()));
    }
    return gr;
}

} // namespace

TEST(Grading, Validation) {
    const auto g = cycle_graph(5);
    Grading gr{{{0, 1, 2}, {3, 4}}, {{1, 2, 1}, {1, 2}}, 2};
    EXPECT_NO_THROW(gr.validate(g));

    auto missing = gr;
    missing.parts[1] = {3};
    missing.part_colorings[1] = {1};
    EXPECT_THROW(missing.validate(g), InvalidGrading);

    auto twice = gr;
    twice.parts[1] = {2, 4};
    EXPECT_THROW(twice.validate(g), InvalidGrading);

    auto improper = gr;
    improper.part_colorings[0] = {1, 1, 2};
    EXPECT_THROW(improper.validate(g), InvalidGrading);

    auto out_of_range = gr;
    out_of_range.part_colorings[1] = {1, 3};
    EXPECT_THROW(out_of_range.validate(g), InvalidGrading);
}

TEST(RefineGrading, C5TwoParts) {
    const ColoredGraph cg(cycle_graph(5), Coloring{1, 2, 1, 2, 3});
    const Grading gr{{{0, 1, 2}, {3, 4}}, {{1, 2, 1}, {1, 2}}, 2};
    const auto z = refine_grading(cg, gr);
    ASSERT_EQ(z.classes.size(), 2u);
    EXPECT_EQ(z.classes[0], (std::vector<Vertex>{0, 2, 3}));
    EXPECT_EQ(z.classes[1], (std::vector<Vertex>{1, 4}));
    EXPECT_EQ(z.origin[3], (std::pair<int, int>{1, 0}));
}

TEST(RefineGrading, SingletonPartsGiveOneClass) {
    const ColoredGraph cg(cycle_graph(5), Coloring{1, 2, 1, 2, 3});
    const auto z = refine_grading(cg, singleton_grading(5));
    ASSERT_EQ(z.classes.size(), 1u);
    EXPECT_EQ(z.classes[0], (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(Lemma1, C5SingletonGrading) {
    const ColoredGraph cg(cycle_graph(5), Coloring{1, 2, 1, 2, 3});
    const auto gr = singleton_grading(5);
    const auto out = lemma1_procedure(cg, gr, 3);
    EXPECT_EQ(out.trace.precondition, PreconditionStatus::False);
    EXPECT_EQ(out.trace.r, 64);
    EXPECT_EQ(out.trace.chosen_class, 0);
    EXPECT_EQ(out.trace.pi_order, (std::vector<Vertex>{0, 1, 2, 3, 4}));
    EXPECT_TRUE(check_lemma1_outcome(cg, gr, 3, out).empty());
    for (const auto &[u, v] : out.trace.arcs) EXPECT_LT(cg.color(u), cg.color(v));
}

TEST(Lemma1, StarGivesWitnessWithGlobalScan) {
    for (int s = 3; s <= 6; ++s) {
        const auto n = static_cast<std::size_t>(s + 1);
        std::vector<Edge> edges;
        for (Vertex leaf = 1; leaf <= s; ++leaf) edges.emplace_back(0, leaf);
        std::vector<Color> colors(n);
        std::iota(colors.begin(), colors.end(), 1);
        const ColoredGraph cg(Graph(n, edges), Coloring(colors));
        const auto gr = singleton_grading(n);
        Lemma1Options opts;
        opts.global_witness_scan = true;
        const auto out = lemma1_procedure(cg, gr, s, opts);
        ASSERT_EQ(out.variant, Lemma1Outcome::Variant::Witness) << s;
        EXPECT_EQ(out.witness_vertex, 0);
        EXPECT_TRUE(verify_witness(cg, gr, 0, out.witness_set, s));
        EXPECT_TRUE(check_lemma1_outcome(cg, gr, s, out).empty());
    }
}

TEST(Lemma1, LongPathGivesRainbowPath) {
    // A path 0-1-...-7 with colors 1..8 and singleton parts in order: every
    // arc is forward, P1 is the whole path and the BFS tree reaches depth 2.
    std::vector<Color> colors(8);
    std::iota(colors.begin(), colors.end(), 1);
    const ColoredGraph cg(path_graph(8), Coloring(colors));
    const auto gr = singleton_grading(8);
    const auto out = lemma1_procedure(cg, gr, 3);
    ASSERT_EQ(out.variant, Lemma1Outcome::Variant::RainbowPath);
    EXPECT_EQ(out.rainbow_path, (Path{{0, 1, 2}}));
    ASSERT_TRUE(out.trace.forward_bfs.has_value());
    EXPECT_TRUE(out.trace.forward_bfs->parent_path_valid);
    EXPECT_EQ(out.trace.forward_path.order(), 8u);
    EXPECT_TRUE(check_lemma1_outcome(cg, gr, 3, out).empty());
}

TEST(Lemma1, Errors) {
    const ColoredGraph cg(cycle_graph(5), Coloring{1, 2, 1, 2, 3});
    EXPECT_THROW(lemma1_procedure(cg, singleton_grading(5), 2), std::invalid_argument);
    Grading bad{{{0, 1, 2}}, {{1, 2, 1}}, 2};
    EXPECT_THROW(lemma1_procedure(cg, bad, 3), InvalidGrading);
}

TEST(Lemma1, VerifiersRejectBadCertificates) {
    const ColoredGraph cg(cycle_graph(5), Coloring{1, 2, 1, 2, 3});
    const auto gr = singleton_grading(5);
    EXPECT_TRUE(verify_rainbow_path(cg, Path{{2, 3, 4}}, 3));
    EXPECT_FALSE(verify_rainbow_path(cg, Path{{0, 1, 2}}, 3));
    EXPECT_FALSE(verify_rainbow_path(cg, Path{{2, 3, 4}}, 4));
    EXPECT_TRUE(verify_witness(cg, gr, 0, {1, 4}, 2));
    EXPECT_FALSE(verify_witness(cg, gr, 0, {1, 4}, 3));
    EXPECT_FALSE(verify_witness(cg, gr, 1, {0, 2}, 2)); // 0 is earlier than 1
    EXPECT_FALSE(verify_witness(cg, gr, 0, {1, 2}, 2)); // 2 is not a neighbor
    const Grading two_first{{{2}, {1}, {3}, {0}, {4}}, {{1}, {1}, {1}, {1}, {1}}, 1};
    EXPECT_FALSE(verify_witness(cg, two_first, 2, {1, 3}, 2)); // both neighbors have color 2
}

TEST(Lemma1, RandomGradedGraphsAreSound) {
    std::mt19937_64 rng(79);
    for (int t = 0; t < 150; ++t) {
        const auto g = random_triangle_free(3 + t % 14, 0.45, rng());
        const auto colors = reference::random_proper_colors(g, rng, 2);
        const ColoredGraph cg(g, Coloring(colors));
        const auto gr = random_grading(g, 1 + rng() % 5, rng);
        const int s = 3 + static_cast<int>(rng() % 2);
        Lemma1Options opts;
        opts.global_witness_scan = (t % 2 == 0);
        const auto out = lemma1_procedure(cg, gr, s, opts);
        const auto bad = check_lemma1_outcome(cg, gr, s, out);
        EXPECT_TRUE(bad.empty()) << (bad.empty() ? "" : bad.front());
        EXPECT_EQ(out.trace.precondition, PreconditionStatus::False);
    }
}

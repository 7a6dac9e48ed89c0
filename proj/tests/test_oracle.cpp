#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "rainbow/chromatic.hpp"
#include "rainbow/gen_io.hpp"
#include "rainbow/oracle.hpp"
#include "support/brute_force.hpp"

using namespace rainbow;

namespace {

const Coloring c5_colors{1, 2, 1, 2, 3};

bool is_induced(const Graph &g, const Path &p) { return reference::naive_is_induced_path(g, p.vertices); }

} // namespace

TEST(LongestInducedPath, Examples) {
    EXPECT_EQ(longest_induced_path(path_graph(4)).path.order(), 4u);
    EXPECT_EQ(longest_induced_path(cycle_graph(5)).path.order(), 4u);
    // No six vertices of the Petersen graph induce a path.
    EXPECT_EQ(reference::naive_longest_induced_path(petersen_graph()), 5u);
    const auto r = longest_induced_path(petersen_graph());
    EXPECT_EQ(r.path.order(), 5u);
    EXPECT_TRUE(r.exact);
    EXPECT_TRUE(is_induced(petersen_graph(), r.path));
    EXPECT_EQ(longest_induced_path(empty_graph(0)).path.order(), 0u);
}

TEST(LongestInducedPath, MatchesNaiveEnumeration) {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 150; ++t) {
        const auto g = reference::random_graph(1 + t % 8, 0.45, rng);
        const auto r = longest_induced_path(g);
        EXPECT_EQ(r.path.order(), reference::naive_longest_induced_path(g));
        EXPECT_TRUE(is_induced(g, r.path));
    }
}

TEST(LongestInducedPath, Budget) {
    EXPECT_THROW(longest_induced_path(cycle_graph(30)), BudgetExceeded);
    SearchBudget tight;
    tight.max_nodes = 5;
    EXPECT_THROW(longest_induced_path(petersen_graph(), tight), BudgetExceeded);
    tight.on_exceed = SearchBudget::OnExceed::BestEffort;
    const auto r = longest_induced_path(petersen_graph(), tight);
    EXPECT_FALSE(r.exact);
    EXPECT_TRUE(is_induced(petersen_graph(), r.path));

    SearchBudget loose;
    loose.on_exceed = SearchBudget::OnExceed::BestEffort;
    const auto big = longest_induced_path(cycle_graph(30), loose);
    EXPECT_TRUE(big.exact);
    EXPECT_EQ(big.path.order(), 29u);
}

TEST(LongestInducedRainbowPath, C5) {
    const ColoredGraph cg(cycle_graph(5), c5_colors);
    EXPECT_EQ(reference::naive_longest_induced_rainbow_path(cg.graph(), c5_colors.assignment()), 3u);
    const auto r = longest_induced_rainbow_path(cg);
    EXPECT_EQ(r.path.order(), 3u);
    const auto rep = classify_path(cg, r.path);
    EXPECT_TRUE(rep.is_induced);
    EXPECT_TRUE(rep.is_rainbow);
}

TEST(LongestInducedRainbowPath, AllDistinctColorsEqualsUnrestricted) {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_triangle_free(2 + t % 12, 0.4, rng());
        std::vector<Color> distinct(g.vertex_count());
        std::iota(distinct.begin(), distinct.end(), 1);
        const ColoredGraph cg(g, Coloring(distinct));
        EXPECT_EQ(longest_induced_rainbow_path(cg).path.order(), longest_induced_path(g).path.order());
    }
}

TEST(LongestInducedRainbowPath, SingleVertex) {
    const ColoredGraph cg(empty_graph(1), Coloring{4});
    EXPECT_EQ(longest_induced_rainbow_path(cg).path, (Path{{0}}));
}

TEST(LongestInducedRainbowPath, MatchesNaiveEnumeration) {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 150; ++t) {
        const auto g = reference::random_graph(1 + t % 8, 0.45, rng);
        const auto colors = reference::random_proper_colors(g, rng, 1);
        const ColoredGraph cg(g, Coloring(colors));
        const auto r = longest_induced_rainbow_path(cg);
        EXPECT_EQ(r.path.order(), reference::naive_longest_induced_rainbow_path(g, colors));
        EXPECT_LE(r.path.order(), longest_induced_path(g).path.order());
    }
}

TEST(MaxColorfulFrom, Examples) {
    const ColoredGraph single(empty_graph(1), Coloring{1});
    const auto s = max_colorful_induced_path_from(single, 0);
    EXPECT_EQ(s.path, (Path{{0}}));
    EXPECT_EQ(s.color_count, 1u);

    const ColoredGraph cg(cycle_graph(5), c5_colors);
    const auto r = max_colorful_induced_path_from(cg, 0);
    EXPECT_EQ(r.color_count, 3u);
    EXPECT_EQ(r.path, (Path{{0, 4, 3}}));

    const ColoredGraph star(build_graph(4, {{0, 1}, {0, 2}, {0, 3}}), Coloring{1, 2, 2, 2});
    const auto st = max_colorful_induced_path_from(star, 0);
    EXPECT_EQ(st.color_count, 2u);
    EXPECT_EQ(st.path, (Path{{0, 1}}));
    EXPECT_THROW(max_colorful_induced_path_from(star, 9), std::invalid_argument);
}

TEST(MaxColorfulFrom, MatchesNaiveEnumeration) {
    std::mt19937_64 rng(61);
    for (int t = 0; t < 120; ++t) {
        const auto g = reference::random_graph(1 + t % 8, 0.4, rng);
        const auto colors = reference::random_proper_colors(g, rng, 2);
        const ColoredGraph cg(g, Coloring(colors));
        const Vertex v = static_cast<Vertex>(rng() % g.vertex_count());
        const auto r = max_colorful_induced_path_from(cg, v);
        EXPECT_EQ(r.color_count, reference::naive_max_colors_from(g, colors, v));
        EXPECT_EQ(r.path.front(), v);
        EXPECT_TRUE(is_induced(g, r.path));
        EXPECT_EQ(classify_path(cg, r.path).color_count, r.color_count);
    }
}

TEST(MaxColorfulFrom, PrefersShorterPaths) {
    // Only the full path 0-1-2-3 reaches color 3 without passing through 4.
    const ColoredGraph cg(build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}}), Coloring{1, 2, 1, 3, 3});
    const auto r = max_colorful_induced_path_from(cg, 0);
    EXPECT_EQ(r.color_count, 3u);
    EXPECT_EQ(r.path, (Path{{0, 1, 2, 3}}));

    // 0-1-2 and 0-1-2-3 both see three colors; the shorter one wins.
    const ColoredGraph tie(path_graph(4), Coloring{1, 2, 3, 2});
    const auto t = max_colorful_induced_path_from(tie, 0);
    EXPECT_EQ(t.color_count, 3u);
    EXPECT_EQ(t.path, (Path{{0, 1, 2}}));
}

TEST(GallaiRoy, Examples) {
    const ColoredGraph cg(cycle_graph(5), c5_colors);
    EXPECT_EQ(gallai_roy_rainbow_path(cg), (Path{{2, 3, 4}}));
    const ColoredGraph k2(complete_graph(2), Coloring{1, 2});
    EXPECT_EQ(gallai_roy_rainbow_path(k2).order(), 2u);
    const ColoredGraph edgeless(empty_graph(3), Coloring{1, 1, 1});
    EXPECT_EQ(gallai_roy_rainbow_path(edgeless).order(), 1u);
}

TEST(GallaiRoy, IncreasingColorsAndAtLeastChi) {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 200; ++t) {
        const auto g = random_triangle_free(2 + t % 13, 0.45, rng());
        const auto colors = reference::random_proper_colors(g, rng, 2);
        const ColoredGraph cg(g, Coloring(colors));
        const auto p = gallai_roy_rainbow_path(cg);
        ASSERT_TRUE(is_path(g, p.vertices));
        for (std::size_t i = 1; i < p.order(); ++i) EXPECT_LT(cg.color(p.vertices[i - 1]), cg.color(p.vertices[i]));
        EXPECT_GE(p.order(), static_cast<std::size_t>(chromatic_number(g).chi));
    }
}

TEST(OracleProperties, OrderChainAndGyarfas) {
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
        const auto g = random_triangle_free(3 + t % 14, 0.4, rng());
        const auto colors = reference::random_proper_colors(g, rng, 1);
        const ColoredGraph cg(g, Coloring(colors));
        const auto lirp = longest_induced_rainbow_path(cg).path.order();
        const auto lip = longest_induced_path(g).path.order();
        EXPECT_LE(lirp, lip);
        EXPECT_LE(lip, g.vertex_count());
        EXPECT_GE(lip, static_cast<std::size_t>(chromatic_number(g).chi));
    }
}

TEST(OracleProperties, InvariantUnderRelabeling) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 60; ++t) {
        const auto g = random_triangle_free(4 + t % 10, 0.4, rng());
        const auto colors = reference::random_proper_colors(g, rng, 1);
        std::vector<Vertex> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = reference::permute(g, perm);
        std::vector<Color> moved(colors.size());
        for (std::size_t v = 0; v < colors.size(); ++v) moved[perm[v]] = colors[v];
        const ColoredGraph a(g, Coloring(colors)), b(h, Coloring(moved));
        EXPECT_EQ(longest_induced_path(g).path.order(), longest_induced_path(h).path.order());
        EXPECT_EQ(longest_induced_rainbow_path(a).path.order(), longest_induced_rainbow_path(b).path.order());
        EXPECT_EQ(gallai_roy_rainbow_path(a).order(), gallai_roy_rainbow_path(b).order());
        EXPECT_EQ(max_colorful_induced_path_from(a, 0).color_count,
                  max_colorful_induced_path_from(b, perm[0]).color_count);
    }
}

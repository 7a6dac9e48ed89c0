#include <gtest/gtest.h>

#include <random>

#include "rainbow/gen_io.hpp"
#include "rainbow/graph.hpp"
#include "support/brute_force.hpp"

using namespace rainbow;

namespace {

const Graph c5 = cycle_graph(5);
const Coloring c5_colors{1, 2, 1, 2, 3};

} // namespace

TEST(BuildGraph, SingleVertex) {
    const auto g = build_graph(1, {});
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(BuildGraph, Cycle) {
    const auto g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    EXPECT_EQ(g.edge_count(), 5u);
    EXPECT_EQ(g, c5);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(BuildGraph, DeduplicatesAndSymmetrizes) {
    const auto g = build_graph(3, {{0, 1}, {0, 1}, {1, 0}});
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(BuildGraph, Errors) {
    EXPECT_THROW(build_graph(3, {{0, 3}}), std::invalid_argument);
    EXPECT_THROW(build_graph(3, {{-1, 0}}), std::invalid_argument);
    EXPECT_THROW(build_graph(3, {{2, 2}}), std::invalid_argument);
}

TEST(BuildGraph, EmptyGraphIsLegal) {
    const auto g = build_graph(0, {});
    EXPECT_EQ(g.vertex_count(), 0u);
    EXPECT_TRUE(is_triangle_free(g));
    EXPECT_TRUE(connected_components(g).empty());
}

TEST(TriangleFree, Examples) {
    EXPECT_TRUE(is_triangle_free(c5));
    EXPECT_FALSE(is_triangle_free(complete_graph(3)));
    const auto petersen = petersen_graph();
    EXPECT_TRUE(reference::triple_check_triangle_free(petersen));
    EXPECT_TRUE(is_triangle_free(petersen));
}

TEST(TriangleFree, AgreesWithTripleCheck) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto g = reference::random_graph(3 + t % 9, 0.35, rng);
        EXPECT_EQ(is_triangle_free(g), reference::triple_check_triangle_free(g));
        EXPECT_EQ(is_triangle_free(g), !find_triangle(g).has_value());
    }
}

TEST(Components, Examples) {
    EXPECT_EQ(connected_components(c5), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}}));
    EXPECT_EQ(connected_components(empty_graph(3)), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
    const auto g = build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}});
    EXPECT_EQ(connected_components(g), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3, 4}, {5, 6}}));
}

TEST(Components, PartitionProperty) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto g = reference::random_graph(1 + t % 12, 0.15, rng);
        const auto comps = connected_components(g);
        std::vector<int> owner(g.vertex_count(), -1);
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (i > 0) EXPECT_LT(comps[i - 1].front(), comps[i].front());
            for (auto v : comps[i]) {
                EXPECT_EQ(owner[v], -1);
                owner[v] = static_cast<int>(i);
            }
            EXPECT_TRUE(is_connected(induced_subgraph(g, std::span<const Vertex>(comps[i])).graph));
        }
        for (auto o : owner) EXPECT_GE(o, 0);
        for (const auto &[u, v] : g.edges()) EXPECT_EQ(owner[u], owner[v]);
    }
}

TEST(InducedSubgraph, Examples) {
    const std::vector<Vertex> all{0, 1, 2, 3, 4};
    EXPECT_EQ(induced_subgraph(c5, std::span<const Vertex>(all)).graph, c5);

    const std::vector<Vertex> seg{0, 1, 2};
    const auto p3 = induced_subgraph(c5, std::span<const Vertex>(seg));
    EXPECT_EQ(p3.graph, path_graph(3));
    EXPECT_EQ(p3.to_parent, seg);
    EXPECT_EQ(p3.local(4), -1);
    EXPECT_EQ(p3.local(2), 2);

    const std::vector<Vertex> bad{0, 7};
    EXPECT_THROW(induced_subgraph(c5, std::span<const Vertex>(bad)), std::invalid_argument);
}

TEST(InducedSubgraph, PetersenOuterCycle) {
    // Any 5-cycle of Petersen; find one by enumeration over 5-subsets whose induced
    // subgraph is 2-regular and connected.
    const auto pg = petersen_graph();
    bool found = false;
    for (std::uint32_t mask = 0; mask < (1u << 10) && !found; ++mask) {
        if (std::popcount(mask) != 5) continue;
        std::vector<Vertex> s;
        for (Vertex v = 0; v < 10; ++v)
            if (mask >> v & 1) s.push_back(v);
        const auto sub = induced_subgraph(pg, std::span<const Vertex>(s));
        bool two_regular = true;
        for (Vertex v = 0; v < 5; ++v) two_regular &= sub.graph.degree(v) == 2;
        if (!two_regular || !is_connected(sub.graph)) continue;
        found = true;
        EXPECT_EQ(sub.graph.edge_count(), 5u);
        for (const auto &[u, v] : sub.graph.edges()) EXPECT_TRUE(pg.adjacent(sub.parent(u), sub.parent(v)));
    }
    EXPECT_TRUE(found);
}

TEST(InducedSubgraph, IdempotentUnderIdentity) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const auto g = reference::random_graph(2 + t % 10, 0.4, rng);
        std::vector<Vertex> s;
        for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v)
            if (rng() & 1) s.push_back(v);
        const auto once = induced_subgraph(g, std::span<const Vertex>(s));
        const auto twice = induced_subgraph(once.graph, once.graph.all_vertices());
        EXPECT_EQ(twice.graph, once.graph);
    }
}

TEST(ClassifyPath, SingleEdge) {
    const ColoredGraph cg(c5, c5_colors);
    const auto r = classify_path(cg, Path{{0, 1}});
    EXPECT_EQ(r.order, 2u);
    EXPECT_TRUE(r.is_induced);
    EXPECT_TRUE(r.is_rainbow);
    EXPECT_EQ(r.color_count, 2u);
}

TEST(ClassifyPath, RepeatedColor) {
    const ColoredGraph cg(c5, c5_colors);
    const auto r = classify_path(cg, Path{{0, 1, 2}});
    EXPECT_TRUE(r.is_induced);
    EXPECT_FALSE(r.is_rainbow);
    EXPECT_EQ(r.color_count, 2u);
}

TEST(ClassifyPath, FullCycleHasChord) {
    const ColoredGraph cg(c5, c5_colors);
    const auto r = classify_path(cg, Path{{4, 0, 1, 2, 3}});
    EXPECT_EQ(r.order, 5u);
    EXPECT_FALSE(r.is_induced);
    EXPECT_EQ(r.color_count, 3u);
}

TEST(ClassifyPath, RejectsNonPaths) {
    const ColoredGraph cg(c5, c5_colors);
    EXPECT_THROW(classify_path(cg, Path{{0, 2}}), std::invalid_argument);
    EXPECT_THROW(classify_path(cg, Path{{0, 1, 0}}), std::invalid_argument);
    EXPECT_THROW(classify_path(cg, Path{}), std::invalid_argument);
    EXPECT_NO_THROW(classify_path(cg, Path{{3}}));
}

TEST(ClassifyPath, RainbowImpliesColorCountEqualsOrder) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto g = reference::random_graph(6, 0.5, rng);
        const ColoredGraph cg(g, Coloring(reference::random_proper_colors(g, rng)));
        reference::for_each_vertex_sequence(g.vertex_count(), [&](const std::vector<Vertex> &seq) {
            if (!is_path(g, seq)) return;
            const auto r = classify_path(cg, seq);
            EXPECT_LE(r.color_count, r.order);
            EXPECT_EQ(r.is_rainbow, reference::distinct_colors(cg.coloring().assignment(), seq) == seq.size());
            if (r.is_rainbow) EXPECT_EQ(r.color_count, r.order);
        });
    }
}

TEST(ShortestPathToSet, StartInTargets) {
    EXPECT_EQ(shortest_path_to_set(c5, 2, VertexSet(5, {2, 4})), (Path{{2}}));
}

TEST(ShortestPathToSet, TieBreakPrefersSmallerId) {
    EXPECT_EQ(shortest_path_to_set(c5, 0, VertexSet(5, {2})), (Path{{0, 1, 2}}));
}

TEST(ShortestPathToSet, UniquePath) {
    EXPECT_EQ(shortest_path_to_set(path_graph(4), 0, VertexSet(4, {3})), (Path{{0, 1, 2, 3}}));
}

TEST(ShortestPathToSet, Errors) {
    EXPECT_THROW(shortest_path_to_set(c5, 0, VertexSet(5)), std::invalid_argument);
    const auto g = build_graph(4, {{0, 1}, {2, 3}});
    EXPECT_THROW(shortest_path_to_set(g, 0, VertexSet(4, {3})), std::invalid_argument);
}

TEST(ShortestPathToSet, ResultIsChordlessAndTouchesTargetsOnce) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 300; ++t) {
        const auto g = random_triangle_free(4 + t % 12, 0.4, rng());
        const auto n = static_cast<Vertex>(g.vertex_count());
        const Vertex v = static_cast<Vertex>(rng() % n);
        VertexSet targets(g.vertex_count());
        for (Vertex u = 0; u < n; ++u)
            if (rng() % 4 == 0) targets.insert(u);
        const auto comp_of_v = [&] {
            for (auto &c : connected_components(g))
                if (std::find(c.begin(), c.end(), v) != c.end()) return c;
            return std::vector<Vertex>{};
        }();
        const bool reachable =
            std::any_of(comp_of_v.begin(), comp_of_v.end(), [&](Vertex u) { return targets.contains(u); });
        if (!reachable) {
            EXPECT_THROW(shortest_path_to_set(g, v, targets), std::invalid_argument);
            continue;
        }
        const auto p = shortest_path_to_set(g, v, targets);
        std::vector<Color> distinct(g.vertex_count());
        for (std::size_t i = 0; i < distinct.size(); ++i) distinct[i] = static_cast<Color>(i + 1);
        const ColoredGraph cg(g, Coloring(distinct));
        EXPECT_TRUE(classify_path(cg, p).is_induced);
        EXPECT_EQ(p.front(), v);
        for (std::size_t i = 0; i + 1 < p.order(); ++i) EXPECT_FALSE(targets.contains(p.vertices[i]));
        EXPECT_TRUE(targets.contains(p.back()));
    }
}

TEST(IsProper, Examples) {
    EXPECT_TRUE(is_proper(c5, c5_colors));
    EXPECT_FALSE(is_proper(complete_graph(2), Coloring{1, 1}));
    EXPECT_TRUE(is_proper(empty_graph(4), Coloring{1, 1, 1, 1}));
    EXPECT_THROW(is_proper(c5, Coloring{1, 2}), std::invalid_argument);
    EXPECT_THROW(ColoredGraph(complete_graph(2), Coloring{1, 1}), std::invalid_argument);
    EXPECT_THROW(Coloring({0, 1}), std::invalid_argument);
}

TEST(ColoringType, SparsePalette) {
    const Coloring c{7, 3, 7, 100};
    EXPECT_EQ(c.palette_size(), 3u);
    EXPECT_EQ(c.palette(), (std::vector<Color>{3, 7, 100}));
}

// Builds the Grötzsch graph, colors it optimally and compares the colorful
// path construction with the exhaustive oracles.

#include <iostream>

#include "rainbow/rainbow.hpp"

int main() {
    using namespace rainbow;

    const Graph g = mycielski_graph(4);
    const auto chi = chromatic_number(g);
    const ColoredGraph cg(g, canonicalize(chi.witness));

    std::cout << "graph6 " << encode_graph6(g) << ", n=" << g.vertex_count() << ", m=" << g.edge_count()
              << ", chi=" << chi.chi << '\n';
    std::cout << "coloring " << join(cg.coloring().assignment()) << '\n';

    const auto built = theorem2_colorful_path(cg, 0, chi.chi);
    write_trace(std::cout, built.trace);
    std::cout << "constructed path " << format_path(built.path) << " sees " << built.color_count << " colors\n";

    const auto best = max_colorful_induced_path_from(cg, 0);
    std::cout << "best from 0 " << format_path(best.path) << " sees " << best.color_count << " colors\n";

    const auto rainbow = longest_induced_rainbow_path(cg);
    std::cout << "longest induced rainbow path " << format_path(rainbow.path) << '\n';
    std::cout << "longest induced path " << longest_induced_path(g).path.order() << " vertices\n";
    std::cout << "color-increasing path " << format_path(gallai_roy_rainbow_path(cg)) << '\n';
}

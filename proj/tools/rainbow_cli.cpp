// rainbow: command-line front end for the induced rainbow path workbench.
//
// Exit status: 0 on success, 1 on usage or I/O errors, 2 when a conjecture
// check recorded at least one violation.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rainbow/rainbow.hpp"

namespace {

using namespace rainbow;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<long long> parse_ints(const std::string &text, const std::string &what) {
    std::istringstream in(text);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size()) throw UsageError("bad integer '" + tok + "' in " + what);
        out.push_back(value);
    }
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph load_graph(const std::string &graph6) {
    if (graph6.empty()) throw UsageError("a graph is required (--graph6)");
    return decode_graph6(graph6);
}

struct ColoringInput {
    std::string inline_text;
    std::string file;

    bool given() const { return !inline_text.empty() || !file.empty(); }

    // Falls back to an optimal coloring when nothing was given.
    Coloring resolve(const Graph &g) const {
        if (!given()) return canonicalize(chromatic_number(g).witness);
        const auto values = parse_ints(file.empty() ? inline_text : read_file(file), "coloring");
        if (values.size() != g.vertex_count())
            throw UsageError("coloring has " + std::to_string(values.size()) + " entries for " +
                             std::to_string(g.vertex_count()) + " vertices");
        std::vector<Color> colors;
        for (auto v : values) {
            if (v < 1) throw UsageError("colors must be positive");
            colors.push_back(static_cast<Color>(v));
        }
        Coloring c(colors);
        if (!is_proper(g, c)) throw UsageError("coloring is not proper");
        return c;
    }
};

// One line per part (vertex ids), then one line per part (that part's colors).
Grading read_grading(const std::string &path) {
    std::istringstream in(read_file(path));
    std::vector<std::vector<long long>> rows;
    for (std::string line; std::getline(in, line);) {
        auto row = parse_ints(line, "grading");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty() || rows.size() % 2 != 0)
        throw UsageError("grading file needs one vertex line and one color line per part");
    Grading gr;
    const auto parts = rows.size() / 2;
    for (std::size_t i = 0; i < parts; ++i) {
        gr.parts.emplace_back(rows[i].begin(), rows[i].end());
        gr.part_colorings.emplace_back(rows[parts + i].begin(), rows[parts + i].end());
        for (auto c : rows[parts + i]) gr.k = std::max(gr.k, static_cast<int>(c));
    }
    return gr;
}

std::ostream &output_stream(const std::string &path, std::ofstream &file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + path);
    return file;
}

struct HarnessFlags {
    std::size_t cap = 1000;
    int delta = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 100'000'000;
    std::size_t max_vertices = 25;
    std::size_t jobs = 1;
    bool thorough = false;
    bool abort_on_malformed = false;

    void attach(CLI::App *cmd) {
        cmd->add_option("--cap", cap, "Canonical colorings enumerated per graph")->check(CLI::PositiveNumber);
        cmd->add_option("--delta", delta, "Extra colors allowed beyond the chromatic number")->check(CLI::NonNegativeNumber);
        cmd->add_option("--samples", samples, "Random colorings sampled after the cap is hit");
        cmd->add_option("--seed", seed, "Seed for sampling");
        cmd->add_option("--budget", budget, "Search-node budget for exact path searches")->check(CLI::PositiveNumber);
        cmd->add_option("--max-vertices", max_vertices, "Largest graph handed to exact path searches");
        cmd->add_flag("--thorough", thorough, "Run the colorful-path construction from every vertex");
    }

    HarnessConfig config() const {
        HarnessConfig cfg;
        cfg.coloring_cap = cap;
        cfg.max_colors_delta = delta;
        cfg.sample_count = samples;
        cfg.seed = seed;
        cfg.budget.max_nodes = budget;
        cfg.budget.max_vertices = max_vertices;
        cfg.parallelism = jobs;
        cfg.thorough = thorough;
        cfg.abort_on_malformed = abort_on_malformed;
        return cfg;
    }
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Induced rainbow paths in colored triangle-free graphs"};
    app.require_subcommand(1);

    // generate
    auto *gen = app.add_subcommand("generate", "Write generated graphs as graph6 lines");
    std::string gen_kind;
    GeneratorSpec spec;
    std::size_t gen_count = 1;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "cycle | mycielski | kneser | random")->required();
    gen->add_option("--n", spec.n, "Cycle length, Kneser ground set size or vertex count");
    gen->add_option("--k,--chi", spec.k, "Kneser subset size or Mycielski chromatic number");
    gen->add_option("--p", spec.p, "Edge probability for random graphs");
    gen->add_option("--seed", spec.seed, "Seed for random graphs");
    gen->add_option("--count", gen_count, "Number of random graphs (seeds seed, seed+1, ...)");
    gen->add_option("--out", gen_out, "Output file (default: standard output)");

    // bounds
    auto *bnd = app.add_subcommand("bounds", "Print r, w_j and c for s, or the guarantee for a chromatic number");
    int bnd_s = 0;
    std::string bnd_chi;
    auto *s_opt = bnd->add_option("--s", bnd_s, "Path order s >= 3");
    auto *chi_opt = bnd->add_option("--chi", bnd_chi, "Chromatic number (arbitrary precision)");
    s_opt->excludes(chi_opt);

    // construct
    auto *con = app.add_subcommand("construct", "Colorful induced path from a vertex");
    std::string con_graph;
    ColoringInput con_col;
    Vertex con_v = 0;
    int con_chi_lb = 0;
    bool con_strict = false, con_trace = false;
    con->add_option("--graph6", con_graph, "Graph in graph6")->required();
    con->add_option("--coloring", con_col.inline_text, "Colors in vertex order (default: an optimal coloring)");
    con->add_option("--coloring-file", con_col.file, "File holding the coloring");
    con->add_option("--vertex", con_v, "Start vertex");
    con->add_option("--chi-lb", con_chi_lb, "Lower bound on the chromatic number (default: exact value)");
    con->add_flag("--strict", con_strict, "Recompute chromatic numbers at every level");
    con->add_flag("--trace", con_trace, "Print every recursion level");

    // lemma1
    auto *lem = app.add_subcommand("lemma1", "Rainbow path or later-neighborhood witness for a graded graph");
    std::string lem_graph, lem_grading;
    ColoringInput lem_col;
    int lem_s = 3;
    bool lem_trace = false, lem_scan = false;
    lem->add_option("--graph6", lem_graph, "Graph in graph6")->required();
    lem->add_option("--coloring", lem_col.inline_text, "Colors in vertex order (default: an optimal coloring)");
    lem->add_option("--coloring-file", lem_col.file, "File holding the coloring");
    lem->add_option("--grading", lem_grading, "Grading file")->required();
    lem->add_option("--s", lem_s, "Path order s >= 3");
    lem->add_flag("--global-scan", lem_scan, "Also scan every vertex for a witness");
    lem->add_flag("--trace", lem_trace, "Print every step");

    // oracle
    auto *orc = app.add_subcommand("oracle", "Exact longest induced (rainbow) paths");
    std::string orc_graph;
    ColoringInput orc_col;
    int orc_v = -1;
    std::uint64_t orc_budget = 100'000'000;
    std::size_t orc_max_vertices = 25;
    orc->add_option("--graph6", orc_graph, "Graph in graph6")->required();
    orc->add_option("--coloring", orc_col.inline_text, "Colors in vertex order");
    orc->add_option("--coloring-file", orc_col.file, "File holding the coloring");
    orc->add_option("--vertex", orc_v, "Also report the most colorful induced path from this vertex");
    orc->add_option("--budget", orc_budget, "Search-node budget")->check(CLI::PositiveNumber);
    orc->add_option("--max-vertices", orc_max_vertices, "Largest graph accepted");

    // check
    auto *chk = app.add_subcommand("check", "Conjecture check for a single graph (JSON report)");
    std::string chk_graph, chk_out;
    HarnessFlags chk_flags;
    chk->add_option("--graph6", chk_graph, "Graph in graph6")->required();
    chk->add_option("--out", chk_out, "Report file (default: standard output)");
    chk_flags.attach(chk);

    // corpus
    auto *cor = app.add_subcommand("corpus", "Conjecture sweep over a graph6 corpus (JSON Lines report)");
    std::string cor_in, cor_out;
    HarnessFlags cor_flags;
    cor->add_option("corpus", cor_in, "Corpus file, one graph6 per line")->required();
    cor->add_option("--out", cor_out, "JSON Lines report file")->required();
    cor->add_option("--jobs", cor_flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cor->add_flag("--abort-on-malformed", cor_flags.abort_on_malformed, "Stop at the first malformed line");
    cor_flags.attach(cor);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*gen) {
            spec.kind = GeneratorSpec::parse_kind(gen_kind);
            std::ofstream file;
            auto &os = output_stream(gen_out, file);
            const auto count = spec.kind == GeneratorSpec::Kind::RandomTriangleFree ? gen_count : 1;
            for (std::size_t i = 0; i < count; ++i) {
                auto one = spec;
                one.seed = spec.seed + i;
                os << encode_graph6(one.generate()) << '\n';
            }
            return 0;
        }

        if (*bnd) {
            if (*chi_opt) {
                BigInt chi;
                try {
                    chi = BigInt(bnd_chi);
                } catch (const std::exception &) {
                    throw UsageError("bad chromatic number '" + bnd_chi + "'");
                }
                std::cout << "chi=" << chi << " guaranteed_length=" << guaranteed_length(chi) << '\n';
            } else if (*s_opt) {
                write_bounds(std::cout, compute_bounds(bnd_s));
            } else {
                for (int s = 3; s <= 6; ++s) write_bounds(std::cout, compute_bounds(s));
            }
            return 0;
        }

        if (*con) {
            const auto g = load_graph(con_graph);
            const ColoredGraph cg(g, con_col.resolve(g));
            const int chi_lb = con_chi_lb > 0 ? con_chi_lb : chromatic_number(g).chi;
            Theorem2Options opts;
            opts.strict = con_strict;
            const auto res = theorem2_colorful_path(cg, con_v, chi_lb, opts);
            if (con_trace) write_trace(std::cout, res.trace);
            std::cout << "path " << format_path(res.path) << '\n'
                      << "colors " << res.color_count << " (guaranteed " << ceil_half(chi_lb) << ")\n";
            const auto bad = check_theorem2(cg, con_v, chi_lb, res);
            for (const auto &b : bad) std::cerr << "check failed: " << b << '\n';
            return bad.empty() ? 0 : 1;
        }

        if (*lem) {
            const auto g = load_graph(lem_graph);
            const ColoredGraph cg(g, lem_col.resolve(g));
            const auto gr = read_grading(lem_grading);
            Lemma1Options opts;
            opts.global_witness_scan = lem_scan;
            const auto out = lemma1_procedure(cg, gr, lem_s, opts);
            if (lem_trace) {
                write_trace(std::cout, out);
            } else {
                std::cout << to_string(out.variant);
                if (out.variant == Lemma1Outcome::Variant::RainbowPath) std::cout << ' ' << format_path(out.rainbow_path);
                if (out.variant == Lemma1Outcome::Variant::Witness)
                    std::cout << ' ' << out.witness_vertex << " {" << join(out.witness_set) << '}';
                std::cout << '\n';
            }
            const auto bad = check_lemma1_outcome(cg, gr, lem_s, out);
            for (const auto &b : bad) std::cerr << "check failed: " << b << '\n';
            return bad.empty() ? 0 : 1;
        }

        if (*orc) {
            const auto g = load_graph(orc_graph);
            SearchBudget budget;
            budget.max_nodes = orc_budget;
            budget.max_vertices = orc_max_vertices;
            const auto lip = longest_induced_path(g, budget);
            std::cout << "longest induced path: " << lip.path.order() << " [" << format_path(lip.path) << "]\n";
            if (orc_col.given() || orc_v >= 0) {
                const ColoredGraph cg(g, orc_col.resolve(g));
                const auto lirp = longest_induced_rainbow_path(cg, budget);
                std::cout << "longest induced rainbow path: " << lirp.path.order() << " ["
                          << format_path(lirp.path) << "]\n";
                const auto gr = gallai_roy_rainbow_path(cg);
                std::cout << "color-increasing path: " << gr.order() << " [" << format_path(gr) << "]\n";
                if (orc_v >= 0) {
                    const auto best = max_colorful_induced_path_from(cg, orc_v, budget);
                    std::cout << "most colorful induced path from " << orc_v << ": " << best.color_count
                              << " colors [" << format_path(best.path) << "]\n";
                }
            }
            return 0;
        }

        if (*chk) {
            const auto g = load_graph(chk_graph);
            const auto rep = check_graph(g, chk_flags.config(), "cli");
            std::ofstream file;
            output_stream(chk_out, file) << to_json(rep).dump() << '\n';
            for (const auto &b : check_report_consistency(rep)) std::cerr << "inconsistent report: " << b << '\n';
            if (!rep.holds_for_all_checked) {
                std::cerr << "CONJECTURE VIOLATION: coloring " << join(rep.witness_coloring->assignment())
                          << " has no induced rainbow path on " << rep.chi << " vertices\n";
                return 2;
            }
            return 0;
        }

        if (*cor) {
            const auto sum = run_corpus(cor_in, cor_out, std::cerr, cor_flags.config());
            std::cout << "graphs " << sum.graphs_processed << ", checks " << sum.checks_run << ", violations "
                      << sum.violations << ", skipped " << sum.skipped << ", wall " << std::fixed << std::setprecision(3)
                      << sum.wall_seconds << " s\n";
            return sum.violations > 0 ? 2 : 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

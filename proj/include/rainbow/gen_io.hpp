#pragma once

// Triangle-free graph families and graph6 serialization.

#include <cstdint>
#include <istream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges);
}

inline Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    return Graph(n, edges);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(n, edges);
}

inline Graph empty_graph(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

/// Mycielskian: originals 0..n-1, shadows n..2n-1 (shadow of i is n+i), apex 2n.
/// Shadow n+i is joined to every neighbor of i, and the apex to every shadow.
inline Graph mycielskian(const Graph &g) {
    const auto n = g.vertex_count();
    std::vector<Edge> edges;
    for (const auto &[u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(static_cast<Vertex>(n) + u, v);
        edges.emplace_back(u, static_cast<Vertex>(n) + v);
    }
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(n + i), static_cast<Vertex>(2 * n));
    return Graph(2 * n + 1, edges);
}

/// Triangle-free graph with chromatic number `chi`: K1, K2, then iterated
/// Mycielskians (C5, Grotzsch, ...).
inline Graph mycielski_graph(int chi) {
    if (chi < 1) throw std::invalid_argument("mycielski family index must be at least 1");
    if (chi == 1) return empty_graph(1);
    Graph g = complete_graph(2);
    for (int i = 2; i < chi; ++i) g = mycielskian(g);
    return g;
}

/// Kneser graph K(n,k): k-subsets of {0..n-1} in lexicographic order, adjacent when disjoint.
inline Graph kneser_graph(int n, int k) {
    if (k < 1 || n < 2 * k) throw std::invalid_argument("kneser graph needs n >= 2k >= 2");
    if (n > 63) throw std::invalid_argument("kneser graph ground set too large");
    std::vector<std::uint64_t> subsets;
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (auto x : pick) mask |= std::uint64_t{1} << x;
        subsets.push_back(mask);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b)
            if (!(subsets[a] & subsets[b])) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Graph(subsets.size(), edges);
}

inline Graph petersen_graph() { return kneser_graph(5, 2); }

/// Random triangle-free graph: all vertex pairs visited in a seeded random
/// order; each pair is kept with probability p unless it would close a
/// triangle with edges already kept. Deterministic given the seed.
inline Graph random_triangle_free(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);

    std::vector<VertexSet> adj(n, VertexSet(n));
    std::vector<Edge> kept;
    for (const auto &[u, v] : pairs) {
        const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (draw >= p) continue;
        if (adj[u].intersects(adj[v])) continue;
        adj[u].insert(v);
        adj[v].insert(u);
        kept.emplace_back(u, v);
    }
    return Graph(n, kept);
}

struct GeneratorSpec {
    enum class Kind { Cycle, MycielskiIterate, Kneser, RandomTriangleFree };

    Kind kind = Kind::Cycle;
    int n = 0;  ///< cycle length, kneser ground set, or random vertex count
    int k = 0;  ///< kneser subset size, or chromatic number for the Mycielski family
    double p = 0.0;
    std::uint64_t seed = 0;

    static Kind parse_kind(std::string_view name) {
        if (name == "cycle") return Kind::Cycle;
        if (name == "mycielskian-iterate" || name == "mycielski") return Kind::MycielskiIterate;
        if (name == "kneser") return Kind::Kneser;
        if (name == "random-triangle-free" || name == "random") return Kind::RandomTriangleFree;
        throw std::invalid_argument("unknown generator kind: " + std::string(name));
    }

    void validate() const {
        switch (kind) {
        case Kind::Cycle:
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            break;
        case Kind::MycielskiIterate:
            if (k < 1) throw std::invalid_argument("mycielski family needs chi >= 1");
            break;
        case Kind::Kneser:
            if (k < 1 || n < 2 * k) throw std::invalid_argument("kneser needs n >= 2k >= 2");
            break;
        case Kind::RandomTriangleFree:
            if (n < 0) throw std::invalid_argument("random graph needs n >= 0");
            if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random graph needs 0 <= p <= 1");
            break;
        }
    }

    Graph generate() const {
        validate();
        switch (kind) {
        case Kind::Cycle: return cycle_graph(static_cast<std::size_t>(n));
        case Kind::MycielskiIterate: return mycielski_graph(k);
        case Kind::Kneser: return kneser_graph(n, k);
        case Kind::RandomTriangleFree: return random_triangle_free(static_cast<std::size_t>(n), p, seed);
        }
        throw std::logic_error("unreachable generator kind");
    }
};

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void append_graph6_size(std::string &out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
}

} // namespace detail

/// Upper triangle column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...),
/// six bits per byte, most significant first, zero padded.
inline std::string encode_graph6(const Graph &g) {
    const auto n = g.vertex_count();
    std::string out;
    detail::append_graph6_size(out, n);
    int bits = 0, acc = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bits = acc = 0;
            }
        }
    if (bits) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

/// Decodes one graph6 line; an optional ">>graph6<<" header and trailing
/// line terminator are accepted. Throws Graph6Error on illegal bytes, a body
/// of the wrong length, or nonzero padding bits.
inline Graph decode_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw Graph6Error("graph6: empty input");
    for (char ch : text) {
        const auto b = static_cast<unsigned char>(ch);
        if (b < 63 || b > 126) throw Graph6Error("graph6: illegal byte " + std::to_string(b));
    }

    auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - 63); };
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (value(0) < 63) {
        n = value(0);
        pos = 1;
    } else if (text.size() >= 2 && value(1) < 63) {
        if (text.size() < 4) throw Graph6Error("graph6: truncated size field");
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        pos = 4;
    } else {
        if (text.size() < 8) throw Graph6Error("graph6: truncated size field");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
        pos = 8;
    }
    if (n > 100000) throw Graph6Error("graph6: vertex count " + std::to_string(n) + " is too large");

    const std::uint64_t pair_bits = n * (n ? n - 1 : 0) / 2;
    const std::uint64_t body_len = (pair_bits + 5) / 6;
    if (text.size() - pos != body_len)
        throw Graph6Error("graph6: expected " + std::to_string(body_len) + " body bytes, found " +
                          std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k) {
            const auto byte = value(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    if (pair_bits % 6) {
        const auto last = value(text.size() - 1);
        const auto pad = 6 - pair_bits % 6;
        if (last & ((1u << pad) - 1)) throw Graph6Error("graph6: nonzero padding bits");
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

struct CorpusLine {
    std::size_t line_number = 0; ///< 1-based
    std::string text;
};

/// Non-empty, non-comment lines of a graph6 corpus. Lines starting with '#' are skipped.
inline std::vector<CorpusLine> read_corpus(std::istream &in) {
    std::vector<CorpusLine> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        out.push_back({number, line.substr(start)});
    }
    return out;
}

} // namespace rainbow

#include "sbe/graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sbe/rng.hpp"

namespace sbe {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 1) throw argument_error("vertex count must be positive");
    for (auto& e : edges) {
        if (e.u == e.v)
            throw argument_error("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > n)
            throw argument_error("edge (" + std::to_string(e.u) + "," +
                                 std::to_string(e.v) + ") outside 1.." + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw argument_error("duplicate edge (" + std::to_string(edges[i].u) + "," +
                                 std::to_string(edges[i].v) + ")");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n + 1, {});
    g.adj_mask_.assign(n + 1, VertexSubset(n));
    for (const auto& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
        g.adj_mask_[e.u].add(e.v);
        g.adj_mask_[e.v].add(e.u);
    }
    for (int v = 1; v <= n; ++v) std::sort(g.adj_[v].begin(), g.adj_[v].end());
    return g;
}

int Graph::min_degree() const {
    int d = n_ > 0 ? n_ : 0;
    for (int v = 1; v <= n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : eol - pos);
        ++number;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        Line line{number, {}};
        std::istringstream iss{std::string(raw)};
        std::string tok;
        while (iss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

int parse_int(const std::string& tok, const Line& line, const char* what) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(tok, &used);
    } catch (const std::exception&) {
        throw parse_error(line.number, std::string("malformed ") + what + " '" + tok + "'");
    }
    if (used != tok.size() || value < 0 || value > 1 << 30)
        throw parse_error(line.number, std::string("malformed ") + what + " '" + tok + "'");
    return (int)value;
}

Edge parse_edge_tokens(const Line& line, const std::string& a, const std::string& b, int n) {
    int u = parse_int(a, line, "vertex");
    int v = parse_int(b, line, "vertex");
    if (u == v) throw parse_error(line.number, "self-loop at vertex " + std::to_string(u));
    if (u < 1 || u > n || v < 1 || v > n)
        throw parse_error(line.number, "vertex label outside 1.." + std::to_string(n));
    return make_edge(u, v);
}

Graph finish_graph(int n, std::vector<Edge> edges, const std::vector<int>& edge_lines) {
    // Re-run the duplicate scan here so the error can name the input line.
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!seen.insert(edges[i]).second)
            throw parse_error(edge_lines[i],
                              "duplicate edge (" + std::to_string(edges[i].u) + "," +
                                  std::to_string(edges[i].v) + ")");
    return Graph::from_edges(n, std::move(edges));
}

} // namespace

Graph parse_graph(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw parse_error(1, "empty input");

    const bool dimacs = lines[0].tokens[0] == "c" || lines[0].tokens[0] == "p";

    int n = -1;
    long long m = -1;
    std::vector<Edge> edges;
    std::vector<int> edge_lines;

    if (dimacs) {
        for (const auto& line : lines) {
            const auto& t = line.tokens;
            if (t[0] == "c") continue;
            if (t[0] == "p") {
                if (n >= 0) throw parse_error(line.number, "repeated problem line");
                if (t.size() != 4 || t[1] != "edge")
                    throw parse_error(line.number, "malformed problem line (want 'p edge n m')");
                n = parse_int(t[2], line, "vertex count");
                m = parse_int(t[3], line, "edge count");
                if (n < 1) throw parse_error(line.number, "vertex count must be positive");
            } else if (t[0] == "e") {
                if (n < 0) throw parse_error(line.number, "edge before problem line");
                if (t.size() != 3) throw parse_error(line.number, "malformed edge line");
                edges.push_back(parse_edge_tokens(line, t[1], t[2], n));
                edge_lines.push_back(line.number);
            } else {
                throw parse_error(line.number, "unknown line type '" + t[0] + "'");
            }
        }
        if (n < 0) throw parse_error(lines.back().number, "missing problem line");
    } else {
        const auto& header = lines[0];
        if (header.tokens.size() != 2)
            throw parse_error(header.number, "malformed header (want 'n m')");
        n = parse_int(header.tokens[0], header, "vertex count");
        m = parse_int(header.tokens[1], header, "edge count");
        if (n < 1) throw parse_error(header.number, "vertex count must be positive");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const auto& line = lines[i];
            if (line.tokens.size() != 2) throw parse_error(line.number, "malformed edge line");
            edges.push_back(parse_edge_tokens(line, line.tokens[0], line.tokens[1], n));
            edge_lines.push_back(line.number);
        }
    }

    if ((long long)edges.size() != m)
        throw parse_error(lines.back().number,
                          "declared " + std::to_string(m) + " edges but found " +
                              std::to_string(edges.size()));
    return finish_graph(n, std::move(edges), edge_lines);
}

std::string write_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::edge_list) {
        out << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    } else {
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Generators

const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::moebius: return "moebius";
        case Family::gnm: return "gnm";
        case Family::regular: return "regular";
        case Family::apollonian: return "apollonian";
    }
    return "?";
}

Family family_from_string(std::string_view name) {
    for (Family f : {Family::path, Family::cycle, Family::complete, Family::moebius,
                     Family::gnm, Family::regular, Family::apollonian})
        if (name == family_name(f)) return f;
    throw argument_error("unknown graph family '" + std::string(name) + "'");
}

Graph path_graph(int n) {
    if (n < 1) throw argument_error("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw argument_error("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({1, n});
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 1) throw argument_error("complete needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph moebius_ladder(int n) {
    if (n < 4 || n % 2 != 0) throw argument_error("moebius ladder needs even n >= 4");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({1, n});
    for (int i = 1; i <= n / 2; ++i) edges.push_back({i, i + n / 2});
    return Graph::from_edges(n, std::move(edges));
}

Graph gnm_graph(int n, long long m, std::uint64_t seed) {
    if (n < 1) throw argument_error("gnm needs n >= 1");
    const long long pairs = (long long)n * (n - 1) / 2;
    if (m < 0 || m > pairs)
        throw argument_error("gnm needs 0 <= m <= " + std::to_string(pairs));
    if (pairs > (1LL << 27))
        throw argument_error("gnm: n too large for the pair-array sampler");

    // The handshake product in lexicographic order; a partial Fisher-Yates
    // picks m of its members uniformly without replacement.
    std::vector<Edge> all;
    all.reserve((std::size_t)pairs);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) all.push_back({u, v});

    std::mt19937_64 gen(seed);
    shuffle_prefix(all, (std::size_t)m, gen);
    all.resize((std::size_t)m);
    return Graph::from_edges(n, std::move(all));
}

namespace {

bool matching_is_simple(const std::vector<int>& stubs, std::set<Edge>& edge_set) {
    edge_set.clear();
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        if (stubs[i] == stubs[i + 1]) return false;
        if (!edge_set.insert(make_edge(stubs[i], stubs[i + 1])).second) return false;
    }
    return true;
}

} // namespace

Graph regular_graph(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n) throw argument_error("regular needs 0 <= d < n");
    if ((long long)n * d % 2 != 0) throw argument_error("regular needs n*d even");
    if (d == 0) return Graph::from_edges(n, {});

    if (d > (n - 1) / 2) {
        // Dense side: sample the sparser complement instead.
        Graph comp = regular_graph(n, n - 1 - d, seed);
        std::vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (!comp.has_edge(u, v)) edges.push_back({u, v});
        return Graph::from_edges(n, std::move(edges));
    }

    std::mt19937_64 gen(seed);
    std::vector<int> stubs;
    stubs.reserve((std::size_t)n * d);
    for (int v = 1; v <= n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);

    // Pairing model: shuffle the stubs and pair them up, rejecting matchings
    // with loops or repeated edges.
    std::set<Edge> edge_set;
    for (int attempt = 0; attempt < 200; ++attempt) {
        shuffle_all(stubs, gen);
        if (matching_is_simple(stubs, edge_set))
            return Graph::from_edges(n, {edge_set.begin(), edge_set.end()});
    }

    // Rejection stalls beyond small d; repair the last matching with random
    // stub switches until it is simple.
    const std::size_t pairs = stubs.size() / 2;
    for (int sweep = 0; sweep < 20000; ++sweep) {
        std::map<Edge, int> count;
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < pairs; ++i) {
            if (stubs[2 * i] == stubs[2 * i + 1]) {
                bad.push_back(i);
                continue;
            }
            if (++count[make_edge(stubs[2 * i], stubs[2 * i + 1])] > 1) bad.push_back(i);
        }
        if (bad.empty()) break;
        for (std::size_t i : bad) {
            std::size_t j = uniform_below(gen, pairs);
            std::swap(stubs[2 * i + 1], stubs[2 * j + 1]);
        }
    }
    if (!matching_is_simple(stubs, edge_set))
        throw argument_error("regular: failed to realize a simple " + std::to_string(d) +
                             "-regular graph on " + std::to_string(n) + " vertices");
    return Graph::from_edges(n, {edge_set.begin(), edge_set.end()});
}

Graph apollonian_graph(int n, std::uint64_t seed) {
    if (n < 3) throw argument_error("apollonian needs n >= 3");
    std::mt19937_64 gen(seed);
    std::vector<Edge> edges = {{1, 2}, {1, 3}, {2, 3}};
    std::vector<std::array<int, 3>> faces = {{1, 2, 3}};
    for (int v = 4; v <= n; ++v) {
        // Subdivide a uniformly random face.
        std::size_t i = uniform_below(gen, faces.size());
        auto [a, b, c] = faces[i];
        edges.push_back(make_edge(a, v));
        edges.push_back(make_edge(b, v));
        edges.push_back(make_edge(c, v));
        faces[i] = {a, b, v};
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph generate(const GenSpec& spec) {
    switch (spec.family) {
        case Family::path: return path_graph(spec.n);
        case Family::cycle: return cycle_graph(spec.n);
        case Family::complete: return complete_graph(spec.n);
        case Family::moebius: return moebius_ladder(spec.n);
        case Family::gnm: return gnm_graph(spec.n, spec.m, spec.seed);
        case Family::regular: return regular_graph(spec.n, spec.d, spec.seed);
        case Family::apollonian: return apollonian_graph(spec.n, spec.seed);
    }
    throw argument_error("unknown family");
}

// ---------------------------------------------------------------------------
// Degree reordering

VertexMapping VertexMapping::identity(int n) {
    VertexMapping m;
    m.forward.resize(n + 1);
    m.inverse.resize(n + 1);
    for (int v = 0; v <= n; ++v) m.forward[v] = m.inverse[v] = v;
    return m;
}

VertexSubset VertexMapping::map_set(const VertexSubset& s) const {
    VertexSubset out(s.universe());
    s.for_each([&](int v) { out.add(forward[v]); });
    return out;
}

VertexSubset VertexMapping::unmap_set(const VertexSubset& s) const {
    VertexSubset out(s.universe());
    s.for_each([&](int v) { out.add(inverse[v]); });
    return out;
}

std::pair<Graph, VertexMapping> reorder_by_degree(const Graph& g, DegreeOrder order) {
    const int n = g.vertex_count();
    std::vector<int> by_rank(n);
    for (int v = 1; v <= n; ++v) by_rank[v - 1] = v;
    std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b))
            return order == DegreeOrder::descending ? g.degree(a) > g.degree(b)
                                                    : g.degree(a) < g.degree(b);
        return a < b; // tie-break: ascending original label
    });

    VertexMapping mapping;
    mapping.forward.assign(n + 1, 0);
    mapping.inverse.assign(n + 1, 0);
    for (int rank = 1; rank <= n; ++rank) {
        mapping.forward[by_rank[rank - 1]] = rank;
        mapping.inverse[rank] = by_rank[rank - 1];
    }

    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& e : g.edges())
        edges.push_back(make_edge(mapping.forward[e.u], mapping.forward[e.v]));
    return {Graph::from_edges(n, std::move(edges)), std::move(mapping)};
}

bool is_independent(const Graph& g, const VertexSubset& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (v > g.vertex_count())
            throw argument_error("vertex " + std::to_string(v) + " outside 1.." +
                                 std::to_string(g.vertex_count()));
        if (ok && g.neighbor_set(v).intersects(s)) ok = false;
    });
    return ok;
}

} // namespace sbe

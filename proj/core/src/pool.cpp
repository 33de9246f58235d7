#include "graphzeta/pool.hpp"

#include "graphzeta/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace graphzeta {

int SampleStream::uniform_int(int lo, int hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return lo + static_cast<int>(x % range);
}

std::complex<double> SampleStream::in_disk(double radius) {
    const double r = radius * std::sqrt(uniform());
    const double phi = 2.0 * std::numbers::pi * uniform();
    return std::polar(r, phi);
}

namespace {

using Adjacency = std::vector<std::vector<int>>;

std::string rooted_code(const Adjacency& adj, int v, int parent) {
    std::vector<std::string> children;
    for (int w : adj[static_cast<std::size_t>(v)])
        if (w != parent) children.push_back(rooted_code(adj, w, v));
    std::sort(children.begin(), children.end());
    std::string code = "(";
    for (const auto& c : children) code += c;
    return code + ")";
}

std::vector<int> tree_centers(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> degree(adj.size());
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
        degree[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (degree[static_cast<std::size_t>(v)] <= 1) leaves.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(leaves.size());
        std::vector<int> next;
        for (int leaf : leaves)
            for (int w : adj[static_cast<std::size_t>(leaf)])
                if (--degree[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        leaves = std::move(next);
    }
    return leaves;
}

// AHU encoding rooted at the center; minimum over the two centers when the
// tree is bicentral.
std::string tree_canonical_code(const Adjacency& adj) {
    std::string best;
    for (int c : tree_centers(adj)) {
        auto code = rooted_code(adj, c, -1);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

std::vector<Edge> prufer_decode(const std::vector<int>& seq, int n) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    std::vector<Edge> edges;
    for (int x : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[static_cast<std::size_t>(leaf)] == 1) {
                edges.emplace_back(leaf, x);
                --degree[static_cast<std::size_t>(leaf)];
                --degree[static_cast<std::size_t>(x)];
                break;
            }
        }
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) {
            if (u < 0) {
                u = v;
            } else {
                edges.emplace_back(u, v);
                break;
            }
        }
    }
    return edges;
}

int parse_order(const std::string& spec, std::size_t colon) {
    int value = 0;
    const char* begin = spec.data() + colon + 1;
    const char* end = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || begin == end)
        throw ParseError("invalid graph order in family spec '" + spec + "'");
    return value;
}

}  // namespace

std::vector<Graph> all_trees(int n) {
    if (n < 2) throw InvalidOrderError("trees need n >= 2, got " + std::to_string(n));
    if (n == 2) return {Graph::from_edges(2, {{0, 1}})};

    std::vector<Graph> trees;
    std::set<std::string> seen;
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    for (;;) {
        auto edges = prufer_decode(seq, n);
        Adjacency adj(static_cast<std::size_t>(n));
        for (const auto& [u, v] : edges) {
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        if (seen.insert(tree_canonical_code(adj)).second) trees.push_back(Graph::from_edges(n, std::move(edges)));

        std::size_t pos = 0;
        while (pos < seq.size() && ++seq[pos] == n) seq[pos++] = 0;
        if (pos == seq.size()) break;
    }
    return trees;
}

Graph random_connected_graph(int n, double extra_edge_probability, SampleStream& rng) {
    if (n < 2) throw InvalidOrderError("random graph needs n >= 2, got " + std::to_string(n));
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(rng.uniform_int(0, i))]);

    std::set<Edge> edges;
    for (int i = 1; i < n; ++i) {
        const int parent = rng.uniform_int(0, i - 1);
        edges.insert(std::minmax(label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(parent)]));
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < extra_edge_probability) edges.insert({u, v});
    return Graph::from_edges(n, {edges.begin(), edges.end()});
}

std::vector<PoolGraph> standard_pool(int num_random, std::uint64_t seed, int max_random_order) {
    std::vector<PoolGraph> pool;
    for (int n = 2; n <= 7; ++n) {
        int k = 0;
        for (auto& t : all_trees(n)) pool.push_back({"tree" + std::to_string(n) + "_" + std::to_string(k++), std::move(t)});
    }
    for (int n = 3; n <= 10; ++n) pool.push_back({"C" + std::to_string(n), cycle_graph(n)});
    for (int n = 2; n <= 6; ++n) pool.push_back({"K" + std::to_string(n), complete_graph(n)});
    for (int n = 2; n <= 10; ++n) pool.push_back({"S" + std::to_string(n), star_graph(n)});

    SampleStream rng(seed);
    for (int i = 0; i < num_random; ++i) {
        const int n = rng.uniform_int(3, max_random_order);
        const double p = rng.uniform(0.0, 0.6);
        pool.push_back({"random" + std::to_string(i) + "_n" + std::to_string(n), random_connected_graph(n, p, rng)});
    }
    return pool;
}

bool is_family_spec(const std::string& spec) {
    return spec == "petersen" || spec.starts_with("complete:") || spec.starts_with("cycle:") || spec.starts_with("star:");
}

Graph graph_from_family_spec(const std::string& spec) {
    if (spec == "petersen") return petersen_graph();
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("unknown graph family spec '" + spec + "'");
    const auto family = spec.substr(0, colon);
    const int n = parse_order(spec, colon);
    if (family == "complete") return complete_graph(n);
    if (family == "cycle") return cycle_graph(n);
    if (family == "star") return star_graph(n);
    throw ParseError("unknown graph family '" + family + "'");
}

}  // namespace graphzeta

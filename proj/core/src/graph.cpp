#include "graphzeta/graph.hpp"

#include "graphzeta/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace graphzeta {

namespace {

std::string pair_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    adjacency_.resize(static_cast<std::size_t>(n_));
    for (const auto& [u, v] : edges_) {
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 2) throw InvalidOrderError("graph needs at least 2 vertices, got " + std::to_string(n));
    for (auto& e : edges) {
        if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
            throw GraphError("edge " + pair_str(e) + " references a vertex outside 0.." + std::to_string(n - 1));
        if (e.first == e.second) throw SelfLoopError("self-loop at edge " + pair_str(e));
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw DuplicateEdgeError("duplicate edge " + pair_str(*dup));

    Graph g(n, std::move(edges));

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                frontier.push(w);
            }
        }
    }
    if (auto it = std::find(seen.begin(), seen.end(), 0); it != seen.end())
        throw DisconnectedError("graph is disconnected: vertex " + std::to_string(it - seen.begin()) +
                                " is unreachable from vertex 0");
    return g;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
    return d;
}

bool Graph::is_regular() const {
    for (int v = 1; v < n_; ++v)
        if (degree(v) != degree(0)) return false;
    return true;
}

bool Graph::is_bipartite() const {
    std::vector<int> color(static_cast<std::size_t>(n_), -1);
    std::queue<Vertex> frontier;
    color[0] = 0;
    frontier.push(0);
    while (!frontier.empty()) {
        Vertex v = frontier.front();
        frontier.pop();
        for (Vertex w : neighbors(v)) {
            auto& cw = color[static_cast<std::size_t>(w)];
            if (cw < 0) {
                cw = 1 - color[static_cast<std::size_t>(v)];
                frontier.push(w);
            } else if (cw == color[static_cast<std::size_t>(v)]) {
                return false;
            }
        }
    }
    return true;
}

ArcIndex::ArcIndex(const Graph& g) {
    arcs_.reserve(2 * g.edges().size());
    outgoing_.resize(static_cast<std::size_t>(g.n()));
    for (const auto& [u, v] : g.edges()) {
        outgoing_[static_cast<std::size_t>(u)].push_back(arcs_.size());
        arcs_.push_back({u, v});
        outgoing_[static_cast<std::size_t>(v)].push_back(arcs_.size());
        arcs_.push_back({v, u});
    }
}

Graph graph_from_edge_list(std::span<const Edge> pairs) {
    if (pairs.empty()) throw GraphError("edge list is empty");
    std::unordered_map<Vertex, Vertex> relabel;
    auto label = [&](Vertex x) {
        if (x < 0) throw GraphError("negative vertex label " + std::to_string(x));
        auto [it, inserted] = relabel.try_emplace(x, static_cast<Vertex>(relabel.size()));
        return it->second;
    };
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& p : pairs) {
        if (p.first == p.second) throw SelfLoopError("self-loop at edge " + pair_str(p));
        Vertex a = label(p.first);
        Vertex b = label(p.second);
        edges.emplace_back(a, b);
    }
    // Report duplicates in the caller's labels rather than the internal ones.
    std::vector<std::pair<Edge, Edge>> normalized;
    normalized.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        normalized.push_back({std::minmax(edges[i].first, edges[i].second), pairs[i]});
    std::sort(normalized.begin(), normalized.end());
    for (std::size_t i = 1; i < normalized.size(); ++i)
        if (normalized[i].first == normalized[i - 1].first)
            throw DuplicateEdgeError("duplicate edge " + pair_str(normalized[i].second));
    return Graph::from_edges(static_cast<int>(relabel.size()), std::move(edges));
}

Graph complete_graph(int n) {
    if (n < 2) throw InvalidOrderError("complete graph needs n >= 2, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidOrderError("cycle graph needs n >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

Graph star_graph(int n) {
    if (n < 2) throw InvalidOrderError("star graph needs n >= 2, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (int leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
    return Graph::from_edges(n, std::move(edges));
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(10, std::move(edges));
}

int betti_number(const Graph& g) { return g.m() - g.n() + 1; }

Graph read_edge_list(std::istream& in) {
    std::vector<Edge> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string tok[3];
        fields >> tok[0] >> tok[1] >> tok[2];
        if (tok[1].empty() || !tok[2].empty())
            throw ParseError("line " + std::to_string(lineno) + ": expected two vertex labels");
        Vertex ends[2];
        for (int k = 0; k < 2; ++k) {
            const auto& t = tok[k];
            auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), ends[k]);
            if (ec != std::errc{} || ptr != t.data() + t.size() || ends[k] < 0)
                throw ParseError("line " + std::to_string(lineno) + ": invalid vertex label '" + t + "'");
        }
        pairs.emplace_back(ends[0], ends[1]);
    }
    if (pairs.empty()) throw ParseError("edge list contains no edges");
    return graph_from_edge_list(pairs);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list file '" + path.string() + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# n=" << g.n() << " m=" << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    nlohmann::ordered_json j;
    j["n"] = g.n();
    j["m"] = g.m();
    j["edges"] = std::move(edges);
    return j.dump();
}

}  // namespace graphzeta

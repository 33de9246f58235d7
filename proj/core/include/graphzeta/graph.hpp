#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphzeta {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple connected undirected graph on vertices 0..n-1.
///
/// Edges are stored as (u, v) with u < v in strictly increasing lexicographic
/// order. Instances are immutable and always satisfy: no self-loops, no
/// multi-edges, connected, and sum of degrees equal to 2m.
class Graph {
public:
    /// Validates and builds a graph from already 0-based edges. Edge endpoints
    /// may be given in either order; they are normalized and sorted.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int n() const noexcept { return n_; }
    int m() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    std::vector<int> degrees() const;

    bool is_regular() const;
    bool is_bipartite() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    Graph(int n, std::vector<Edge> edges);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Oriented arc (origin, terminus).
struct Arc {
    Vertex origin;
    Vertex terminus;
    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Canonical arc layout: edge j = (u, v) yields arc 2j = (u, v) and
/// arc 2j+1 = (v, u).
class ArcIndex {
public:
    explicit ArcIndex(const Graph& g);

    std::size_t size() const noexcept { return arcs_.size(); }
    const Arc& operator[](std::size_t e) const { return arcs_[e]; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    static constexpr std::size_t inverse(std::size_t e) noexcept { return e ^ 1U; }
    Vertex origin(std::size_t e) const { return arcs_[e].origin; }
    Vertex terminus(std::size_t e) const { return arcs_[e].terminus; }

    /// Arcs leaving vertex v, ascending by index.
    std::span<const std::size_t> outgoing(Vertex v) const { return outgoing_[static_cast<std::size_t>(v)]; }

private:
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> outgoing_;
};

/// Builds a graph from arbitrary non-negative labels. Labels are renumbered
/// 0..n-1 in order of first appearance.
Graph graph_from_edge_list(std::span<const Edge> pairs);

Graph complete_graph(int n);
Graph cycle_graph(int n);
/// Vertex 0 is the hub.
Graph star_graph(int n);
Graph petersen_graph();

/// Betti number m - n + 1.
int betti_number(const Graph& g);

/// Reads the edge-list text format: one edge per line as two
/// whitespace-separated non-negative integers; blank lines and lines starting
/// with '#' are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const Graph& g);

/// {"n":int,"m":int,"edges":[[u,v],...]}
std::string graph_to_json(const Graph& g);

}  // namespace graphzeta

#include "graphzeta/walk_operators.hpp"

namespace graphzeta {

RealMatrix grover_matrix(const Graph& g) {
    const ArcIndex arcs(g);
    const auto size = static_cast<Eigen::Index>(arcs.size());
    RealMatrix u = RealMatrix::Zero(size, size);
    // Column f feeds every arc e leaving t(f).
    for (std::size_t f = 0; f < arcs.size(); ++f) {
        const Vertex pivot = arcs.terminus(f);
        const double d = static_cast<double>(g.degree(pivot));
        for (std::size_t e : arcs.outgoing(pivot)) {
            const auto row = static_cast<Eigen::Index>(e);
            const auto col = static_cast<Eigen::Index>(f);
            u(row, col) = (f == ArcIndex::inverse(e)) ? 2.0 / d - 1.0 : 2.0 / d;
        }
    }
    return u;
}

RealMatrix positive_support(const RealMatrix& f, double threshold) {
    return (f.array() > threshold).cast<double>().matrix();
}

RealMatrix edge_matrix(const Graph& g) {
    RealMatrix b = positive_support(grover_matrix(g));
    for (std::size_t e = 0; e < static_cast<std::size_t>(b.rows()); ++e)
        b(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(ArcIndex::inverse(e))) = 0.0;
    return b;
}

RealMatrix transition_matrix(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.n());
    RealMatrix p = RealMatrix::Zero(n, n);
    for (Vertex u = 0; u < g.n(); ++u) {
        const double w = 1.0 / static_cast<double>(g.degree(u));
        for (Vertex v : g.neighbors(u)) p(u, v) = w;
    }
    return p;
}

RealMatrix adjacency_matrix(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.n());
    RealMatrix a = RealMatrix::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    return a;
}

RealMatrix degree_matrix(const Graph& g) {
    const auto n = static_cast<Eigen::Index>(g.n());
    RealMatrix d = RealMatrix::Zero(n, n);
    for (Vertex v = 0; v < g.n(); ++v) d(v, v) = static_cast<double>(g.degree(v));
    return d;
}

RealMatrix laplacian(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }

WalkOperators::WalkOperators(const Graph& g)
    : graph(&g),
      u_matrix(grover_matrix(g)),
      u_support(positive_support(u_matrix)),
      edge(edge_matrix(g)),
      p_matrix(transition_matrix(g)),
      a_matrix(adjacency_matrix(g)),
      d_matrix(degree_matrix(g)),
      laplacian(d_matrix - a_matrix) {}

}  // namespace graphzeta

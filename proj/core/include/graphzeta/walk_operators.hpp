#pragma once

#include "graphzeta/graph.hpp"

#include <Eigen/Dense>

namespace graphzeta {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Grover matrix U (2m x 2m) indexed by the canonical ArcIndex:
///   U[e][f] = 2/d - 1   if f = e^-1,
///           = 2/d       if t(f) = o(e) and f != e^-1,
///           = 0         otherwise,
/// where d = deg t(f) = deg o(e).
RealMatrix grover_matrix(const Graph& g);

/// Entrywise indicator of F > threshold. The default threshold absorbs
/// rounding in 2/d - 1.
RealMatrix positive_support(const RealMatrix& f, double threshold = 1e-12);

/// Edge (non-backtracking) matrix B[e][f] = 1 if t(f) = o(e) and f != e^-1.
/// Equals positive_support(grover_matrix(g)) when every degree is at least 2;
/// at a degree-1 vertex 2/d - 1 = 1 keeps the reflection in U+, B drops it.
RealMatrix edge_matrix(const Graph& g);

/// Simple random walk: P[u][v] = 1/deg u for adjacent u, v.
RealMatrix transition_matrix(const Graph& g);

RealMatrix adjacency_matrix(const Graph& g);
RealMatrix degree_matrix(const Graph& g);
/// D - A.
RealMatrix laplacian(const Graph& g);

/// All dense operators of one graph, built together.
struct WalkOperators {
    explicit WalkOperators(const Graph& g);

    const Graph* graph;
    RealMatrix u_matrix;
    RealMatrix u_support;
    RealMatrix edge;
    RealMatrix p_matrix;
    RealMatrix a_matrix;
    RealMatrix d_matrix;
    RealMatrix laplacian;
};

}  // namespace graphzeta

#pragma once

#include "graphzeta/graph.hpp"

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace graphzeta {

/// Seeded source of uniform variates. Built on mt19937_64 with the bit-level
/// conversion done here, so streams are identical across standard libraries.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);
    /// Uniform point in the closed disk |z| <= radius.
    std::complex<double> in_disk(double radius);

private:
    std::mt19937_64 engine_;
};

/// All pairwise non-isomorphic trees with n vertices (n >= 2).
std::vector<Graph> all_trees(int n);

/// Random connected graph on n vertices: a random recursive spanning tree
/// under a random relabeling, plus every other pair with probability p.
Graph random_connected_graph(int n, double extra_edge_probability, SampleStream& rng);

struct PoolGraph {
    std::string name;
    Graph graph;
};

/// The standard verification pool: every tree on 2..7 vertices, C_3..C_10,
/// K_2..K_6, S_2..S_10, and `num_random` seeded random connected graphs with
/// between 3 and `max_random_order` vertices.
std::vector<PoolGraph> standard_pool(int num_random = 100, std::uint64_t seed = 42, int max_random_order = 12);

/// Parses "complete:n", "cycle:n", "star:n" or "petersen". Throws ParseError
/// for anything else.
Graph graph_from_family_spec(const std::string& spec);
bool is_family_spec(const std::string& spec);

}  // namespace graphzeta

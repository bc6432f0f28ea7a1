#pragma once

#include <cstdint>
#include <vector>

namespace nckit {

/// Adjacency as bitsets over vertex indices 0..n-1.
using AdjacencyMatrix = std::vector<std::vector<bool>>;

/// All maximal cliques of an undirected graph (Bron-Kerbosch with pivoting).
/// Isolated vertices come back as singleton cliques. Output is sorted.
std::vector<std::vector<int>> max_cliques_serial(const AdjacencyMatrix& adj);

/// OpenMP variant: independent Bron-Kerbosch subtrees per seed vertex in a
/// fixed vertex order. Same output as the serial reference.
std::vector<std::vector<int>> max_cliques_parallel(const AdjacencyMatrix& adj);

std::vector<std::vector<int>> max_cliques(const AdjacencyMatrix& adj);

/// Process-wide switch for the parallel kernels (also NCKIT_SERIAL=1 env).
void set_parallel_enabled(bool on);
bool parallel_enabled();

}  // namespace nckit

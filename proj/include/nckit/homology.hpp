#pragma once

#include <vector>

#include "nckit/complex.hpp"
#include "nckit/ratpoly.hpp"

namespace nckit {

using IntMatrix = std::vector<std::vector<BigInt>>;  // row-major

/// Integer simplicial chain complex with the alternating-sign boundary
/// convention on sorted vertex order.
struct ChainComplex {
    std::vector<std::vector<Simplex>> bases;  // bases[k] = k-simplexes
    std::vector<IntMatrix> boundaries;        // boundaries[k] = d_k : C_k -> C_{k-1}
                                              // (boundaries[0] is the empty map)

    int top_dim() const { return static_cast<int>(bases.size()) - 1; }
};

ChainComplex chain_complex(const SimplicialComplex& sigma);

struct SmithResult {
    std::vector<BigInt> invariant_factors;  // d_1 | d_2 | ..., all positive
    int rank = 0;
};

SmithResult smith_normal_form(IntMatrix m);

struct HomologyResult {
    std::vector<long> betti;                       // per degree 0..dim
    std::vector<std::vector<BigInt>> torsion;      // factors > 1, each dividing the next
    bool reduced = false;
};

HomologyResult homology(const SimplicialComplex& sigma, bool reduced = false);

struct KTheoryRanks {
    long rank_K0 = 0;  // sum of even Betti numbers
    long rank_K1 = 0;  // sum of odd Betti numbers
};

KTheoryRanks rational_k_ranks(const SimplicialComplex& sigma);

long euler_characteristic(const ChainComplex& c);

}  // namespace nckit

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nckit/homology.hpp"
#include "oracles.hpp"

using namespace nckit;

namespace {

// Antipodal quotient of the icosahedron: 6 vertices, 15 edges (all pairs),
// 10 triangles; Euler characteristic 1.
SimplicialComplex projective_plane() {
    std::vector<std::vector<int>> tris = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                                          {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}};
    std::vector<Simplex> facets;
    for (const auto& t : tris)
        facets.push_back(Simplex({VertexId(t[0]), VertexId(t[1]), VertexId(t[2])}));
    return SimplicialComplex::from_maximal(std::move(facets));
}

IntMatrix random_int_matrix(std::mt19937_64& rng, size_t rows, size_t cols, long bound) {
    IntMatrix m(rows, std::vector<BigInt>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            m[i][j] = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

}  // namespace

TEST_CASE("boundary matrices") {
    SimplicialComplex edge = SimplicialComplex::from_maximal({Simplex({"a", "b"})});
    ChainComplex c = chain_complex(edge);
    REQUIRE(c.top_dim() == 1);
    REQUIRE(c.boundaries[1].size() == 2);
    CHECK(c.boundaries[1][0][0] == -1);
    CHECK(c.boundaries[1][1][0] == 1);

    SimplicialComplex hollow = SimplicialComplex::from_maximal(
        {Simplex({"a", "b"}), Simplex({"b", "c"}), Simplex({"a", "c"})});
    ChainComplex hc = chain_complex(hollow);
    REQUIRE(hc.bases[1].size() == 3);
    for (size_t j = 0; j < 3; ++j) {
        BigInt col_sum = 0;
        for (size_t i = 0; i < 3; ++i) col_sum += hc.boundaries[1][i][j];
        CHECK(col_sum == 0);
    }

    // column count of each boundary equals the simplex count in that degree
    SimplicialComplex s3 = sphere_complex(3);
    ChainComplex sc = chain_complex(s3);
    for (int k = 1; k <= sc.top_dim(); ++k) {
        CHECK(sc.bases[k].size() == s3.simplexes_of_dim(k).size());
        CHECK(sc.boundaries[k][0].size() == sc.bases[k].size());
    }
}

TEST_CASE("smith normal form on fixed matrices") {
    IntMatrix id3 = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    SmithResult r = smith_normal_form(id3);
    CHECK(r.rank == 3);
    CHECK(r.invariant_factors == std::vector<BigInt>{1, 1, 1});

    IntMatrix m = {{2, 0}, {0, 0}};
    SmithResult r2 = smith_normal_form(m);
    CHECK(r2.rank == 1);
    CHECK(r2.invariant_factors == std::vector<BigInt>{2});

    IntMatrix m3 = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    SmithResult r3 = smith_normal_form(m3);
    // classical example: factors 2, 2, 156 (divisibility chain)
    CHECK(r3.rank == 3);
    CHECK(r3.invariant_factors == std::vector<BigInt>{2, 2, 156});
}

TEST_CASE("smith normal form against independent oracles") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 60; ++trial) {
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        IntMatrix m = random_int_matrix(rng, rows, cols, 6);
        SmithResult r = smith_normal_form(m);
        CHECK(r.rank == oracle::rational_rank(m));
        CHECK(r.invariant_factors == oracle::determinant_divisor_factors(m));
        // divisibility chain
        for (size_t i = 0; i + 1 < r.invariant_factors.size(); ++i)
            CHECK(r.invariant_factors[i + 1] % r.invariant_factors[i] == 0);
    }
}

TEST_CASE("homology of spheres") {
    HomologyResult h1 = homology(sphere_complex(1));
    CHECK(h1.betti == std::vector<long>{1, 1});
    CHECK(h1.torsion[0].empty());
    CHECK(h1.torsion[1].empty());

    HomologyResult h2 = homology(sphere_complex(2));
    CHECK(h2.betti == std::vector<long>{1, 0, 1});

    HomologyResult h3 = homology(sphere_complex(3));
    CHECK(h3.betti == std::vector<long>{1, 0, 0, 1});

    HomologyResult h0 = homology(sphere_complex(0));
    CHECK(h0.betti == std::vector<long>{2});

    HomologyResult r1 = homology(sphere_complex(1), /*reduced=*/true);
    CHECK(r1.betti == std::vector<long>{0, 1});
    CHECK(r1.reduced);
}

TEST_CASE("projective plane carries 2-torsion") {
    SimplicialComplex rp2 = projective_plane();
    CHECK(rp2.vertices().size() == 6);
    CHECK(rp2.simplexes_of_dim(1).size() == 15);
    CHECK(rp2.maximal_simplexes().size() == 10);

    HomologyResult h = homology(rp2);
    CHECK(h.betti == std::vector<long>{1, 0, 0});
    CHECK(h.torsion[1] == std::vector<BigInt>{2});
    CHECK(h.torsion[2].empty());
}

TEST_CASE("contractible complexes") {
    SimplicialComplex full3 = SimplicialComplex::from_maximal({Simplex({"a", "b", "c", "d"})});
    HomologyResult h = homology(full3);
    CHECK(h.betti == std::vector<long>{1, 0, 0, 0});
    for (const auto& t : h.torsion) CHECK(t.empty());
}

TEST_CASE("euler characteristic") {
    // from the chain complex: alternating simplex counts
    CHECK(euler_characteristic(chain_complex(sphere_complex(2))) == 2);
    CHECK(euler_characteristic(chain_complex(sphere_complex(1))) == 0);
    CHECK(euler_characteristic(chain_complex(projective_plane())) == 1);

    // equals the alternating Betti sum (torsion drops out rationally)
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        auto facets = oracle::random_facets(rng, 8);
        std::vector<Simplex> fs;
        for (auto& f : facets) fs.emplace_back(f);
        SimplicialComplex c = SimplicialComplex::from_maximal(fs);
        HomologyResult h = homology(c);
        long chi = 0;
        for (size_t k = 0; k < h.betti.size(); ++k) chi += (k % 2 ? -1 : 1) * h.betti[k];
        CHECK(chi == euler_characteristic(chain_complex(c)));
    }
}

TEST_CASE("rational K ranks") {
    KTheoryRanks s2 = rational_k_ranks(sphere_complex(2));
    CHECK(s2.rank_K0 == 2);
    CHECK(s2.rank_K1 == 0);

    KTheoryRanks s1 = rational_k_ranks(sphere_complex(1));
    CHECK(s1.rank_K0 == 1);
    CHECK(s1.rank_K1 == 1);

    KTheoryRanks pt = rational_k_ranks(SimplicialComplex::from_maximal({Simplex({"pt"})}));
    CHECK(pt.rank_K0 == 1);
    CHECK(pt.rank_K1 == 0);

    KTheoryRanks s0 = rational_k_ranks(sphere_complex(0));
    CHECK(s0.rank_K0 == 2);
    CHECK(s0.rank_K1 == 0);
}

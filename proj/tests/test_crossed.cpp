#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nckit/crossed.hpp"
#include "nckit/sigma_f.hpp"

using namespace nckit;
using Eigen::MatrixXcd;

namespace {

// The averaging projection over Z/2: both graded slots equal [[1/2]].
GradedProjectionFamily z2_averaging() {
    GradedProjectionFamily fam;
    fam.group = FiniteGroup::cyclic(2);
    fam.d = 1;
    fam.slots = {MatrixXcd::Constant(1, 1, 0.5), MatrixXcd::Constant(1, 1, 0.5)};
    return fam;
}

}  // namespace

TEST_CASE("regular representation conventions are frozen") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    RegularRepOps reg(z3);
    int n = z3.size();
    MatrixXcd id = MatrixXcd::Identity(n, n);

    for (int s = 0; s < n; ++s) {
        MatrixXcd lam = MatrixXcd::Zero(n, n), rho = MatrixXcd::Zero(n, n);
        for (int t = 0; t < n; ++t) {
            lam(z3.mul[s][t], t) = 1;               // lambda_s xi_t = xi_{st}
            rho(z3.mul[t][z3.inv[s]], t) = 1;       // rho_s xi_t = xi_{t s^{-1}}
        }
        CHECK(reg.lambda(s) == lam);
        CHECK(reg.rho(s) == rho);
        // both are homomorphisms, and they commute with each other
        for (int u = 0; u < n; ++u) {
            CHECK((reg.lambda(s) * reg.lambda(u) - reg.lambda(z3.mul[s][u])).norm() == 0.0);
            CHECK((reg.rho(s) * reg.rho(u) - reg.rho(z3.mul[s][u])).norm() == 0.0);
            CHECK((reg.lambda(s) * reg.rho(u) - reg.rho(u) * reg.lambda(s)).norm() == 0.0);
        }
    }
    CHECK(reg.unit(1, 2) * reg.unit(2, 0) == reg.unit(1, 0));
    CHECK((reg.unit(0, 0) + reg.unit(1, 1) + reg.unit(2, 2) - id).norm() == 0.0);
}

TEST_CASE("averaging projection over Z/2 end to end") {
    GradedProjectionFamily fam = z2_averaging();
    ResidualReport vr = verify_family(fam);
    CHECK(vr.pass());
    CHECK(vr.max_residual() == 0.0);  // exact in floating point
    CHECK(fam.support() == std::vector<int>{0, 1});

    PHatResult ph = build_p_hat(fam);
    CHECK(ph.report.pass());
    RegularRepOps reg(fam.group);
    MatrixXcd expected = 0.5 * (MatrixXcd::Identity(2, 2) + reg.rho(1));
    CHECK((ph.p_hat - expected).norm() <= 1e-15);
    CHECK((ph.p_hat * ph.p_hat - ph.p_hat).norm() <= 1e-15);

    FFamilyResult ff = build_f_family(fam);
    CHECK(ff.report.pass());
    REQUIRE(ff.f.size() == 2);
    for (const auto& f : ff.f) {
        CHECK((f.adjoint() - f).norm() <= 1e-14);
        CHECK(min_eigenvalue(f) >= -1e-12);
    }

    // compression of the length-one word (g): both sides equal (1/8) e_11.
    // p_1 p_g p_1 = 1/8 as scalars; the residual of the identity is zero.
    CHECK(compression_identity_check(fam, ff, {1}) <= 1e-12);
    CHECK(compression_identity_check(fam, ff, {}) <= 1e-12);     // p_1^3 = 1/8 too
    CHECK(compression_identity_check(fam, ff, {1, 1}) <= 1e-12);

    // direct numeric confirmation of the claimed value on the word (g)
    MatrixXcd root = hermitian_sqrt(ff.f[0]);
    MatrixXcd e11 = MatrixXcd::Zero(2, 2);
    e11(0, 0) = 1;
    MatrixXcd beta_g = root * reg.lambda(1) * root;
    MatrixXcd lhs = e11 * root * beta_g * root * e11;
    CHECK(std::abs(lhs(0, 0).real() - 0.125) <= 1e-12);
    CHECK((lhs - 0.125 * e11).norm() <= 1e-12);
}

TEST_CASE("spectral families over cyclic and symmetric groups") {
    for (const auto& g : {FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
                          FiniteGroup::symmetric(3)}) {
        for (int d : {1, 2}) {
            GradedProjectionFamily fam = graded_projection_from_group_algebra(g, d, 7);
            CHECK(verify_family(fam).pass());
            // support is symmetric and contains the identity
            auto supp = fam.support();
            std::set<int> ss(supp.begin(), supp.end());
            CHECK(ss.count(g.id) == 1);
            for (int s : supp) CHECK(ss.count(g.inv[s]) == 1);

            FFamilyResult ff = build_f_family(fam);
            CHECK(ff.report.pass());
            for (const auto& word : std::vector<std::vector<int>>{{}, {1}, {1, 1}})
                CHECK(compression_identity_check(fam, ff, word) <= 1e-8);
        }
    }
}

TEST_CASE("subalgebra families stay supported on the subgroup") {
    FiniteGroup z4 = FiniteGroup::cyclic(4);
    std::vector<int> h = {0, 2};
    GradedProjectionFamily fam = graded_projection_from_group_algebra(z4, 2, 3, h);
    CHECK(verify_family(fam).pass());
    for (int s : fam.support()) CHECK((s == 0 || s == 2));
    CHECK(fam.slots[1].operatorNorm() <= 1e-12);
    CHECK(fam.slots[3].operatorNorm() <= 1e-12);
}

TEST_CASE("identity-supported family gives orthogonal f_s") {
    GradedProjectionFamily fam;
    fam.group = FiniteGroup::cyclic(3);
    fam.d = 1;
    fam.slots = {MatrixXcd::Identity(1, 1), MatrixXcd::Zero(1, 1), MatrixXcd::Zero(1, 1)};
    CHECK(verify_family(fam).pass());
    FFamilyResult ff = build_f_family(fam);
    CHECK(ff.report.pass());
    for (int s = 0; s < 3; ++s)
        for (int t = 0; t < 3; ++t)
            if (s != t) CHECK((ff.f[s] * ff.f[t]).norm() <= 1e-14);
}

TEST_CASE("refinement does not degrade a family") {
    GradedProjectionFamily fam = graded_projection_from_group_algebra(FiniteGroup::cyclic(3), 2, 1);
    double before = verify_family(fam).max_residual();
    GradedProjectionFamily ref = refine_family(fam, 50);
    CHECK(verify_family(ref).max_residual() <= before + 1e-12);
    CHECK(verify_family(ref).pass());
}

TEST_CASE("product norm table") {
    GradedProjectionFamily fam = z2_averaging();
    auto table = product_norm_table(fam, 3);
    CHECK(!table.empty());
    for (const auto& e : table) {
        CHECK(e.word.size() >= 1);
        CHECK(e.word.size() <= 3);
        CHECK(e.product_in_support);  // support is all of Z/2
        CHECK(e.norm ==
              doctest::Approx(std::pow(0.5, double(e.word.size()))).epsilon(1e-12));
    }
    // the identity-supported family has off-support products of norm zero
    GradedProjectionFamily idf;
    idf.group = FiniteGroup::cyclic(2);
    idf.d = 1;
    idf.slots = {MatrixXcd::Identity(1, 1), MatrixXcd::Zero(1, 1)};
    for (const auto& e : product_norm_table(idf, 2)) {
        CHECK(e.product_in_support);
        CHECK(e.norm == doctest::Approx(1.0));
    }
}

TEST_CASE("cutoff projection on the barycenter orbit") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    GroupOracle g = GroupOracle::finite(z3);
    GammaSubset f(g, g.all_elements());
    std::vector<double> bary = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    SampledCrossedRep rep = cutoff_projection(z3, f, {bary});
    CHECK(rep.report.pass());
    CHECK(rep.points.size() == 1);  // the barycenter is translation invariant
    // e = (1/3) * (all-ones): the rank-one averaging projection
    MatrixXcd ones = MatrixXcd::Constant(3, 3, 1.0 / 3);
    CHECK((rep.e - ones).norm() <= 1e-14);
    CHECK((rep.e * rep.e - rep.e).operatorNorm() <= 1e-14);
}

TEST_CASE("cutoff projection on a point-mass orbit") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    GroupOracle g = GroupOracle::finite(z3);
    GammaSubset f(g, g.all_elements());
    std::vector<double> delta = {1.0, 0.0, 0.0};
    SampledCrossedRep rep = cutoff_projection(z3, f, {delta});
    CHECK(rep.report.pass());
    CHECK(rep.points.size() == 3);  // full free orbit
    CHECK((rep.e * rep.e - rep.e).operatorNorm() <= 1e-12);
    CHECK((rep.e.adjoint() - rep.e).operatorNorm() <= 1e-12);
    CHECK(std::abs(rep.e.trace().real() - 3.0) <= 1e-12);  // one dimension per point

    // generic interior points also work
    std::vector<double> interior = {0.5, 0.3, 0.2};
    SampledCrossedRep rep2 = cutoff_projection(FiniteGroup::cyclic(2),
                                               GammaSubset(GroupOracle::finite(FiniteGroup::cyclic(2)),
                                                           GroupOracle::finite(FiniteGroup::cyclic(2)).all_elements()),
                                               {{0.7, 0.3}});
    CHECK(rep2.report.pass());
    (void)interior;
}

TEST_CASE("malformed inputs are rejected") {
    FiniteGroup z3 = FiniteGroup::cyclic(3);
    GroupOracle g = GroupOracle::finite(z3);
    GammaSubset f(g, g.all_elements());
    CHECK_THROWS(cutoff_projection(z3, f, {{0.5, 0.5}}));  // wrong arity

    // a family violating (P1): p_g not the adjoint slot
    GradedProjectionFamily bad = z2_averaging();
    bad.slots[1](0, 0) = std::complex<double>(0.0, 0.5);
    CHECK(!verify_family(bad).pass());
}

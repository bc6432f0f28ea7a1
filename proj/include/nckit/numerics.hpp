#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "nckit/presentation.hpp"

namespace nckit {

struct ToleranceConfig {
    double eps_herm = 1e-10;
    double eps_eig = 1e-10;
    double eps_rel = 1e-9;
    double eps_idem = 1e-9;
    double eps_supp = 1e-10;
};

struct CheckEntry {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct ResidualReport {
    std::vector<CheckEntry> entries;

    void add(std::string name, double residual, double tol) {
        entries.push_back({std::move(name), residual, tol, residual <= tol});
    }
    void merge(const ResidualReport& o) {
        entries.insert(entries.end(), o.entries.begin(), o.entries.end());
    }
    bool pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    double max_residual() const {
        double m = 0;
        for (const auto& e : entries) m = std::max(m, e.residual);
        return m;
    }
};

/// Finite-dimensional representation: one hermitian matrix per generator.
struct MatrixRep {
    PresentationPtr presentation;
    int dim = 0;
    std::vector<Eigen::MatrixXcd> images;  // indexed by generator
};

/// Substitute the representation matrices into a polynomial, specializing
/// the formal parameter at `t`.
Eigen::MatrixXcd evaluate(const NCPoly& poly, const MatrixRep& rep, double t = 0.0);

/// Residuals of all defining relations of the representation's presentation:
/// hermitian defect, negative eigenvalue defect, forced-zero products
/// (pairwise for Flag, all orderings of minimal non-faces for Full,
/// commutators plus non-faces for Abelian), and sum h_s h_t = h_t per t.
ResidualReport verify_matrix_rep(const MatrixRep& rep, const ToleranceConfig& tol = {});
ResidualReport verify_matrix_rep_serial(const MatrixRep& rep, const ToleranceConfig& tol = {});

/// Random representation of a full simplex algebra: Gram matrices A_i,
/// normalized to h_i = S^{-1/2} A_i S^{-1/2} with S the sum.
MatrixRep random_simplex_rep(const Simplex& delta, int d, unsigned long seed);

/// Block-diagonal over maximal simplexes: each facet block carries a random
/// simplex representation of its own generators, the others are zero there.
MatrixRep random_complex_rep(const SimplicialComplex& sigma, int d, unsigned long seed);

/// Exact representation of the sphere algebra from anticommuting hermitian
/// unitaries: x_i = gamma_i / sqrt(n+1), h_{i+-} = (I +- gamma_i)/(2(n+1)).
MatrixRep clifford_sphere_rep(int n);

/// The gamma matrices themselves (hermitian, unitary, anticommuting).
std::vector<Eigen::MatrixXcd> clifford_gammas(int n);

struct HomotopyCheckOptions {
    int samples = 11;  // equispaced t values including endpoints
    const GeneratorAssignment* endpoint0 = nullptr;
    const GeneratorAssignment* endpoint1 = nullptr;
    double eps_endpoint = 1e-12;
};

/// Specialize the family at sampled t in [0,1] on a representation of the
/// target and verify the source relations at each sample; optionally pin the
/// endpoint images against named assignments.
ResidualReport verify_homotopy(const HomotopyFamily& family, const MatrixRep& target_rep,
                               const HomotopyCheckOptions& opts = {},
                               const ToleranceConfig& tol = {});

/// Rotation homotopy between the two 2x2-block maps of the sphere algebra,
/// checked on the Clifford representation at `samples` values of
/// t in [0, pi/2]; endpoints must reproduce the block maps exactly.
ResidualReport rotation_homotopy_check(int n, int samples = 11, const ToleranceConfig& tol = {},
                                       double eps_endpoint = 1e-12);

/// Max over the given representations of the norm of the evaluated element:
/// a lower bound for the universal norm.
double norm_sup_estimate(const NCPoly& element, const std::vector<MatrixRep>& reps,
                         double t = 0.0);

/// Hermitian functional calculus helpers (eigenvalues clamped at +-eps).
Eigen::MatrixXcd hermitian_sqrt(const Eigen::MatrixXcd& m, double eps_eig = 1e-10);
double min_eigenvalue(const Eigen::MatrixXcd& m);

}  // namespace nckit

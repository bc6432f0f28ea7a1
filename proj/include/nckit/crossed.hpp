#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "nckit/complex.hpp"
#include "nckit/group.hpp"
#include "nckit/numerics.hpp"

namespace nckit {

/// Left/right regular representation and matrix units on the group's
/// canonical basis: lambda_s xi_t = xi_{st}, rho_s xi_t = xi_{t s^{-1}}
/// (both are homomorphisms), e_{st} xi_u = delta_{tu} xi_s.
struct RegularRepOps {
    FiniteGroup group;

    explicit RegularRepOps(FiniteGroup g) : group(std::move(g)) {}
    int n() const { return group.size(); }

    Eigen::MatrixXcd lambda(int s) const;
    Eigen::MatrixXcd rho(int s) const;
    Eigen::MatrixXcd unit(int s, int t) const;
};

/// Finitely supported matrix family {p_s} over a finite group, the component
/// system of a projection in M_d x C[Gamma] graded by the group.
struct GradedProjectionFamily {
    FiniteGroup group;
    int d = 0;
    std::vector<Eigen::MatrixXcd> slots;  // indexed by group element; d x d each
    unsigned long seed = 0;

    /// Indices with slot norm above eps.
    std::vector<int> support(double eps = 1e-10) const;
};

/// Residuals of (P1) p_s* = p_{s^{-1}} and (P2) p_t = sum_s p_s p_{s^{-1}t},
/// plus support symmetry / identity-membership checks.
ResidualReport verify_family(const GradedProjectionFamily& fam, const ToleranceConfig& tol = {});

/// Canonical source of examples: spectral projection (above the median
/// eigenvalue) of a random hermitian element of the subalgebra
/// M_d x C[H] inside M_d x C[Gamma]; graded slots read off the block column
/// of the identity. Redraws on a degenerate spectral gap.
GradedProjectionFamily graded_projection_from_group_algebra(
    const FiniteGroup& gamma, int d, unsigned long seed,
    const std::optional<std::vector<int>>& subgroup = std::nullopt);

/// Best-effort residual minimization for user-supplied families: random
/// perturbation descent on the hermitian seed of the spectral construction.
GradedProjectionFamily refine_family(const GradedProjectionFamily& fam, int iterations = 200);

/// p_hat = sum_s p_s x rho_s, with idempotency/self-adjointness residuals.
struct PHatResult {
    Eigen::MatrixXcd p_hat;
    ResidualReport report;
};
PHatResult build_p_hat(const GradedProjectionFamily& fam, const ToleranceConfig& tol = {});

/// f_s = p_hat (1 x e_ss) p_hat with the five identity checks:
/// (i) f_s f_t = p_hat (p_{s^{-1}t} x e_st) p_hat, (ii) vanishing off the
/// support, (iii) sum_s f_s f_t = f_t, (iv) translation equivariance,
/// (v) positivity.
struct FFamilyResult {
    std::vector<Eigen::MatrixXcd> f;  // indexed by group element
    Eigen::MatrixXcd p_hat;
    ResidualReport report;
};
FFamilyResult build_f_family(const GradedProjectionFamily& fam, const ToleranceConfig& tol = {});

/// Compression identity for x = p_{s_1} ... p_{s_n} through
/// beta(p_s) = f_1^{1/2} (1 x lambda_s) f_1^{1/2}:
/// (1 x e_11) f_1^{1/2} beta(x) f_1^{1/2} (1 x e_11) = (p_1 x p_1) x e_11,
/// i.e. the sandwich telescopes through e_11 lambda_s p_hat e_11 = p_s x e_11.
double compression_identity_check(const GradedProjectionFamily& fam,
                                  const FFamilyResult& ff,
                                  const std::vector<int>& word);

/// Norm table of products p_{s_1} ... p_{s_n} up to the given length,
/// reported against membership of s_1...s_n in the support (the stronger
/// single-relation system is reported, never assumed).
struct ProductNormEntry {
    std::vector<int> word;
    bool product_in_support = false;
    double norm = 0.0;
};
std::vector<ProductNormEntry> product_norm_table(const GradedProjectionFamily& fam,
                                                 int max_len = 4, double eps_supp = 1e-10);

/// Cut-off projection on the sampled crossed-product model: functions on a
/// Gamma-invariant set of unit measures, u_s = I x lambda_s,
/// e = sum_s f^{1/2} u_s f^{1/2} with f the weight at the identity.
struct SampledCrossedRep {
    FiniteGroup group;
    std::vector<std::vector<double>> points;  // weights indexed by group element
    Eigen::MatrixXcd e;
    ResidualReport report;
};

SampledCrossedRep cutoff_projection(const FiniteGroup& gamma, const GammaSubset& f,
                                    const std::vector<std::vector<double>>& seed_points,
                                    const ToleranceConfig& tol = {});

}  // namespace nckit

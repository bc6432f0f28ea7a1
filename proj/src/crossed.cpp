#include "nckit/crossed.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace nckit {

using Eigen::MatrixXcd;

namespace {

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace

MatrixXcd RegularRepOps::lambda(int s) const {
    MatrixXcd m = MatrixXcd::Zero(n(), n());
    for (int t = 0; t < n(); ++t) m(group.mul[s][t], t) = 1;
    return m;
}

MatrixXcd RegularRepOps::rho(int s) const {
    MatrixXcd m = MatrixXcd::Zero(n(), n());
    for (int t = 0; t < n(); ++t) m(group.mul[t][group.inv[s]], t) = 1;
    return m;
}

MatrixXcd RegularRepOps::unit(int s, int t) const {
    MatrixXcd m = MatrixXcd::Zero(n(), n());
    m(s, t) = 1;
    return m;
}

std::vector<int> GradedProjectionFamily::support(double eps) const {
    std::vector<int> out;
    for (size_t s = 0; s < slots.size(); ++s)
        if (slots[s].size() > 0 && slots[s].operatorNorm() > eps) out.push_back(static_cast<int>(s));
    return out;
}

ResidualReport verify_family(const GradedProjectionFamily& fam, const ToleranceConfig& tol) {
    const FiniteGroup& g = fam.group;
    int n = g.size();
    ResidualReport rep;
    for (int s = 0; s < n; ++s)
        rep.add("P1(" + g.names[s] + ")",
                (fam.slots[s].adjoint() - fam.slots[g.inv[s]]).operatorNorm(), tol.eps_rel);
    for (int t = 0; t < n; ++t) {
        MatrixXcd sum = MatrixXcd::Zero(fam.d, fam.d);
        for (int s = 0; s < n; ++s) sum += fam.slots[s] * fam.slots[g.mul[g.inv[s]][t]];
        rep.add("P2(" + g.names[t] + ")", (sum - fam.slots[t]).operatorNorm(), tol.eps_rel);
    }
    rep.add("p_1 positive", std::max(0.0, -min_eigenvalue(fam.slots[g.id])), tol.eps_eig);
    {
        MatrixXcd sum = MatrixXcd::Zero(fam.d, fam.d);
        for (int s = 0; s < n; ++s) sum += fam.slots[s] * fam.slots[s].adjoint();
        rep.add("p_1 = sum p_s p_s*", (sum - fam.slots[g.id]).operatorNorm(), tol.eps_rel);
    }
    auto supp = fam.support(tol.eps_supp);
    std::set<int> ss(supp.begin(), supp.end());
    bool symmetric = true;
    for (int s : supp) symmetric = symmetric && ss.count(g.inv[s]);
    rep.add("support symmetric", symmetric ? 0.0 : 1.0, 0.5);
    rep.add("support contains 1", (supp.empty() || ss.count(g.id)) ? 0.0 : 1.0, 0.5);
    return rep;
}

GradedProjectionFamily graded_projection_from_group_algebra(
    const FiniteGroup& gamma, int d, unsigned long seed,
    const std::optional<std::vector<int>>& subgroup) {
    int n = gamma.size();
    std::vector<int> h;
    if (subgroup) {
        h = *subgroup;
        std::set<int> hs(h.begin(), h.end());
        if (!hs.count(gamma.id)) throw std::invalid_argument("subgroup: missing identity");
        for (int a : h) {
            if (!hs.count(gamma.inv[a])) throw std::invalid_argument("subgroup: not inverse-closed");
            for (int b : h)
                if (!hs.count(gamma.mul[a][b]))
                    throw std::invalid_argument("subgroup: not closed under products");
        }
    } else {
        for (int i = 0; i < n; ++i) h.push_back(i);
    }

    RegularRepOps reg(gamma);
    long dim = static_cast<long>(d) * n;

    for (int attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(seed + 7919ULL * attempt);
        std::normal_distribution<double> gauss(0.0, 1.0);
        MatrixXcd y = MatrixXcd::Zero(dim, dim);
        for (int s : h) {
            MatrixXcd a(d, d);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) a(i, j) = std::complex<double>(gauss(rng), gauss(rng));
            y += kron(a, reg.lambda(s));
        }
        MatrixXcd x = y + y.adjoint();
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(x);
        long cut = dim / 2;
        if (cut == 0 || es.eigenvalues()(cut) - es.eigenvalues()(cut - 1) < 1e-8) continue;
        MatrixXcd proj = MatrixXcd::Zero(dim, dim);
        for (long k = cut; k < dim; ++k)
            proj += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();

        GradedProjectionFamily fam;
        fam.group = gamma;
        fam.d = d;
        fam.seed = seed;
        fam.slots.assign(n, MatrixXcd::Zero(d, d));
        // proj = sum_s p_s (x) lambda_s; the block column of the identity
        // element carries the coefficients: proj[(i,s),(j,id)] = (p_s)_ij
        for (int s = 0; s < n; ++s)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    fam.slots[s](i, j) = proj(static_cast<long>(i) * n + s,
                                              static_cast<long>(j) * n + gamma.id);
        return fam;
    }
    throw std::runtime_error(
        "graded_projection_from_group_algebra: degenerate spectral gap on every redraw");
}

GradedProjectionFamily refine_family(const GradedProjectionFamily& fam, int iterations) {
    auto residual = [](const GradedProjectionFamily& f) {
        return verify_family(f).max_residual();
    };
    GradedProjectionFamily best = fam;
    double best_res = residual(best);
    std::mt19937_64 rng(fam.seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double step = 0.1;
    for (int it = 0; it < iterations && best_res > 1e-13; ++it) {
        GradedProjectionFamily cand = best;
        int s = static_cast<int>(rng() % cand.slots.size());
        MatrixXcd noise(cand.d, cand.d);
        for (int i = 0; i < cand.d; ++i)
            for (int j = 0; j < cand.d; ++j)
                noise(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        cand.slots[s] += step * noise;
        // keep (P1) structurally true for the perturbed pair
        cand.slots[cand.group.inv[s]] = cand.slots[s].adjoint();
        double r = residual(cand);
        if (r < best_res) {
            best = std::move(cand);
            best_res = r;
        } else {
            step *= 0.97;
        }
    }
    return best;
}

PHatResult build_p_hat(const GradedProjectionFamily& fam, const ToleranceConfig& tol) {
    RegularRepOps reg(fam.group);
    int n = fam.group.size();
    long dim = static_cast<long>(fam.d) * n;
    PHatResult out;
    out.p_hat = MatrixXcd::Zero(dim, dim);
    for (int s = 0; s < n; ++s) out.p_hat += kron(fam.slots[s], reg.rho(s));
    out.report.add("p_hat idempotent", (out.p_hat * out.p_hat - out.p_hat).operatorNorm(),
                   tol.eps_idem);
    out.report.add("p_hat self-adjoint", (out.p_hat.adjoint() - out.p_hat).operatorNorm(),
                   tol.eps_idem);
    return out;
}

FFamilyResult build_f_family(const GradedProjectionFamily& fam, const ToleranceConfig& tol) {
    const FiniteGroup& g = fam.group;
    RegularRepOps reg(g);
    int n = g.size();
    MatrixXcd id_d = MatrixXcd::Identity(fam.d, fam.d);

    FFamilyResult out;
    PHatResult ph = build_p_hat(fam, tol);
    out.p_hat = ph.p_hat;
    out.report = ph.report;

    for (int s = 0; s < n; ++s)
        out.f.push_back(out.p_hat * kron(id_d, reg.unit(s, s)) * out.p_hat);

    auto supp = fam.support(tol.eps_supp);
    std::set<int> ss(supp.begin(), supp.end());

    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            int q = g.mul[g.inv[s]][t];
            MatrixXcd rhs = out.p_hat * kron(fam.slots[q], reg.unit(s, t)) * out.p_hat;
            out.report.add("(i) f_" + g.names[s] + " f_" + g.names[t],
                           (out.f[s] * out.f[t] - rhs).operatorNorm(), tol.eps_rel);
            if (!ss.count(q))
                out.report.add("(ii) off-support f_" + g.names[s] + " f_" + g.names[t],
                               (out.f[s] * out.f[t]).operatorNorm(), tol.eps_rel);
        }

    for (int t = 0; t < n; ++t) {
        MatrixXcd sum = MatrixXcd::Zero(out.p_hat.rows(), out.p_hat.cols());
        for (int s = 0; s < n; ++s) sum += out.f[s] * out.f[t];
        out.report.add("(iii) sum_s f_s f_" + g.names[t], (sum - out.f[t]).operatorNorm(),
                       tol.eps_rel);
    }

    for (int s = 0; s < n; ++s) {
        MatrixXcd ls = kron(id_d, reg.lambda(s));
        for (int t = 0; t < n; ++t)
            out.report.add("(iv) Ad(lambda_" + g.names[s] + ") f_" + g.names[t],
                           (ls * out.f[t] * ls.adjoint() - out.f[g.mul[s][t]]).operatorNorm(),
                           tol.eps_rel);
    }

    for (int s = 0; s < n; ++s)
        out.report.add("(v) f_" + g.names[s] + " positive",
                       std::max(0.0, -min_eigenvalue(out.f[s])), tol.eps_rel);
    return out;
}

double compression_identity_check(const GradedProjectionFamily& fam, const FFamilyResult& ff,
                                  const std::vector<int>& word) {
    const FiniteGroup& g = fam.group;
    RegularRepOps reg(g);
    MatrixXcd id_d = MatrixXcd::Identity(fam.d, fam.d);
    MatrixXcd f1 = ff.f[g.id];
    MatrixXcd root = hermitian_sqrt(f1);

    MatrixXcd beta_x = MatrixXcd::Identity(f1.rows(), f1.cols());
    MatrixXcd x = MatrixXcd::Identity(fam.d, fam.d);
    for (int s : word) {
        beta_x = beta_x * (root * kron(id_d, reg.lambda(s)) * root);
        x = x * fam.slots[s];
    }

    MatrixXcd e11 = kron(id_d, reg.unit(g.id, g.id));
    MatrixXcd lhs = e11 * root * beta_x * root * e11;
    MatrixXcd rhs = kron(fam.slots[g.id] * x * fam.slots[g.id], reg.unit(g.id, g.id));
    return (lhs - rhs).operatorNorm();
}

std::vector<ProductNormEntry> product_norm_table(const GradedProjectionFamily& fam, int max_len,
                                                 double eps_supp) {
    auto supp = fam.support(eps_supp);
    std::set<int> ss(supp.begin(), supp.end());
    std::vector<ProductNormEntry> out;
    std::vector<int> word;
    std::function<void()> rec = [&] {
        if (!word.empty()) {
            ProductNormEntry e;
            e.word = word;
            int prod = fam.group.id;
            MatrixXcd m = MatrixXcd::Identity(fam.d, fam.d);
            for (int s : word) {
                prod = fam.group.mul[prod][s];
                m = m * fam.slots[s];
            }
            e.product_in_support = ss.count(prod) > 0;
            e.norm = m.operatorNorm();
            out.push_back(std::move(e));
        }
        if (static_cast<int>(word.size()) == max_len) return;
        for (int s : supp) {
            word.push_back(s);
            rec();
            word.pop_back();
        }
    };
    rec();
    return out;
}

SampledCrossedRep cutoff_projection(const FiniteGroup& gamma, const GammaSubset& f,
                                    const std::vector<std::vector<double>>& seed_points,
                                    const ToleranceConfig& tol) {
    int n = gamma.size();
    GroupOracle g = GroupOracle::finite(gamma);

    SampledCrossedRep out;
    out.group = gamma;

    // close the sample set under left translation: (s.x)(t) = x(s^{-1} t)
    std::set<std::vector<double>> pts;
    for (const auto& p : seed_points) {
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("cutoff_projection: point must weight every group element");
        for (int s = 0; s < n; ++s) {
            std::vector<double> moved(n);
            for (int t = 0; t < n; ++t) moved[t] = p[gamma.mul[gamma.inv[s]][t]];
            pts.insert(std::move(moved));
        }
    }
    out.points.assign(pts.begin(), pts.end());
    long m = static_cast<long>(out.points.size());

    // every point is a unit measure supported on a simplex of Sigma_F
    double sum_defect = 0, member_defect = 0;
    for (const auto& p : out.points) {
        double sum = 0;
        std::vector<int> supp;
        for (int t = 0; t < n; ++t) {
            sum += p[t];
            if (p[t] > tol.eps_supp) supp.push_back(t);
        }
        sum_defect = std::max(sum_defect, std::abs(sum - 1.0));
        for (size_t a = 0; a < supp.size(); ++a)
            for (size_t b = a + 1; b < supp.size(); ++b) {
                GroupElem q = g.multiply(g.inverse({supp[a]}), {supp[b]});
                if (!f.contains(q)) member_defect = 1.0;
            }
    }
    out.report.add("points are unit measures", sum_defect, 1e-12);
    out.report.add("points supported on Sigma_F simplexes", member_defect, 0.5);

    // cut-off property: the translates of the identity-weight function sum to 1
    double cutoff_defect = 0;
    for (const auto& p : out.points) {
        double sum = 0;
        for (int s = 0; s < n; ++s) sum += p[s];
        cutoff_defect = std::max(cutoff_defect, std::abs(sum - 1.0));
    }
    out.report.add("sum of translates of f is 1", cutoff_defect, 1e-12);

    // representation on l^2(X) (x) l^2(Gamma): basis index x*n + t;
    // pi(a) = sum_t diag_x a(t.x) (x) e_tt with a = weight at the identity,
    // so a(t.x) = x(t^{-1}); u_s = I (x) lambda_s
    long dim = m * n;
    RegularRepOps reg(gamma);
    Eigen::VectorXd fdiag(dim);
    for (long x = 0; x < m; ++x)
        for (int t = 0; t < n; ++t) fdiag(x * n + t) = std::max(0.0, out.points[x][gamma.inv[t]]);

    MatrixXcd e = MatrixXcd::Zero(dim, dim);
    Eigen::VectorXd froot = fdiag.cwiseSqrt();
    for (int s = 0; s < n; ++s) {
        MatrixXcd us = MatrixXcd::Zero(dim, dim);
        for (long x = 0; x < m; ++x)
            for (int t = 0; t < n; ++t) us(x * n + gamma.mul[s][t], x * n + t) = 1;
        e += froot.asDiagonal() * us * froot.asDiagonal();
    }
    out.e = e;
    out.report.add("e idempotent", (e * e - e).operatorNorm(), tol.eps_idem);
    out.report.add("e self-adjoint", (e.adjoint() - e).operatorNorm(), tol.eps_idem);
    return out;
}

}  // namespace nckit

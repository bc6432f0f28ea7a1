#include "nckit/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "nckit/assignments.hpp"
#include "nckit/cliques.hpp"

namespace nckit {

using Eigen::MatrixXcd;

Eigen::MatrixXcd evaluate(const NCPoly& poly, const MatrixRep& rep, double t) {
    MatrixXcd out = MatrixXcd::Zero(rep.dim, rep.dim);
    for (const auto& [word, coeff] : poly.terms()) {
        MatrixXcd m = MatrixXcd::Identity(rep.dim, rep.dim);
        for (int g : word) m = m * rep.images.at(g);
        out += coeff.eval(t) * m;
    }
    return out;
}

double min_eigenvalue(const MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es((m + m.adjoint()) / 2.0);
    return es.eigenvalues().minCoeff();
}

MatrixXcd hermitian_sqrt(const MatrixXcd& m, double eps_eig) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es((m + m.adjoint()) / 2.0);
    Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < ev.size(); ++i) {
        if (ev(i) < -eps_eig)
            throw std::invalid_argument("hermitian_sqrt: matrix not positive semidefinite");
        ev(i) = std::sqrt(std::max(ev(i), 0.0));
    }
    return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

struct Task {
    std::string name;
    double tol;
    std::function<double()> run;
};

ResidualReport run_tasks(std::vector<Task> tasks, bool parallel) {
    std::vector<double> res(tasks.size(), 0.0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(tasks.size()); ++i) res[i] = tasks[i].run();
    } else {
        for (size_t i = 0; i < tasks.size(); ++i) res[i] = tasks[i].run();
    }
    ResidualReport rep;
    for (size_t i = 0; i < tasks.size(); ++i) rep.add(tasks[i].name, res[i], tasks[i].tol);
    return rep;
}

std::vector<Task> relation_tasks(const MatrixRep& rep, const ToleranceConfig& tol) {
    const AlgebraPresentation& p = *rep.presentation;
    if (static_cast<int>(rep.images.size()) != p.num_generators())
        throw std::invalid_argument("verify_matrix_rep: image count mismatch");
    for (const auto& m : rep.images)
        if (m.rows() != rep.dim || m.cols() != rep.dim)
            throw std::invalid_argument("verify_matrix_rep: dimension mismatch");

    std::vector<Task> tasks;
    int n = p.num_generators();
    for (int i = 0; i < n; ++i) {
        tasks.push_back({"herm(" + p.gen_label(i).to_string() + ")", tol.eps_herm,
                         [&rep, i] { return (rep.images[i] - rep.images[i].adjoint()).operatorNorm(); }});
        tasks.push_back({"posdef(" + p.gen_label(i).to_string() + ")", tol.eps_eig,
                         [&rep, i] { return std::max(0.0, -min_eigenvalue(rep.images[i])); }});
    }

    auto product_task = [&](const std::vector<int>& word) {
        std::string name = "zero(";
        for (size_t k = 0; k < word.size(); ++k)
            name += (k ? " " : "") + p.gen_label(word[k]).to_string();
        name += ")";
        tasks.push_back({name, tol.eps_rel, [&rep, word] {
                             MatrixXcd m = rep.images[word[0]];
                             for (size_t k = 1; k < word.size(); ++k) m = m * rep.images[word[k]];
                             return m.operatorNorm();
                         }});
    };

    if (p.variant() == Variant::Flag) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && !p.has_edge_indices(i, j)) product_task({i, j});
    } else {
        if (p.variant() == Variant::Abelian) {
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    tasks.push_back({"comm(" + p.gen_label(i).to_string() + "," +
                                         p.gen_label(j).to_string() + ")",
                                     tol.eps_rel, [&rep, i, j] {
                                         return (rep.images[i] * rep.images[j] -
                                                 rep.images[j] * rep.images[i])
                                             .operatorNorm();
                                     }});
            for (const auto& nf : p.minimal_nonfaces()) product_task(nf);
        } else {
            for (const auto& nf : p.minimal_nonfaces()) {
                std::vector<int> perm = nf;
                do product_task(perm); while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }

    for (int t = 0; t < n; ++t) {
        tasks.push_back({"unit(" + p.gen_label(t).to_string() + ")", tol.eps_rel, [&rep, t] {
                             MatrixXcd s = MatrixXcd::Zero(rep.dim, rep.dim);
                             for (const auto& h : rep.images) s += h * rep.images[t];
                             return (s - rep.images[t]).operatorNorm();
                         }});
    }
    return tasks;
}

}  // namespace

ResidualReport verify_matrix_rep(const MatrixRep& rep, const ToleranceConfig& tol) {
    return run_tasks(relation_tasks(rep, tol), parallel_enabled());
}

ResidualReport verify_matrix_rep_serial(const MatrixRep& rep, const ToleranceConfig& tol) {
    return run_tasks(relation_tasks(rep, tol), false);
}

MatrixRep random_simplex_rep(const Simplex& delta, int d, unsigned long seed) {
    if (d < 1) throw std::invalid_argument("random_simplex_rep: d < 1");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    int n = static_cast<int>(delta.size());

    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<MatrixXcd> grams;
        MatrixXcd s = MatrixXcd::Zero(d, d);
        for (int i = 0; i < n; ++i) {
            MatrixXcd b(d, d);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) b(r, c) = std::complex<double>(gauss(rng), gauss(rng));
            MatrixXcd a = b * b.adjoint();
            s += a;
            grams.push_back(std::move(a));
        }
        if (min_eigenvalue(s) < 1e-8) continue;
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(s);
        Eigen::VectorXd ev = es.eigenvalues();
        for (int i = 0; i < ev.size(); ++i) ev(i) = 1.0 / std::sqrt(ev(i));
        MatrixXcd s_inv_sqrt = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();

        MatrixRep rep;
        rep.presentation = presentation_of(SimplicialComplex::from_maximal({delta}), Variant::Full);
        rep.dim = d;
        for (int i = 0; i < n; ++i) {
            MatrixXcd h = s_inv_sqrt * grams[i] * s_inv_sqrt;
            rep.images.push_back((h + h.adjoint()) / 2.0);
        }
        return rep;
    }
    throw std::runtime_error("random_simplex_rep: degenerate draw five times in a row");
}

MatrixRep random_complex_rep(const SimplicialComplex& sigma, int d, unsigned long seed) {
    const auto& facets = sigma.maximal_simplexes();
    MatrixRep rep;
    rep.presentation = presentation_of(sigma, Variant::Full);
    rep.dim = d * static_cast<int>(facets.size());
    rep.images.assign(rep.presentation->num_generators(), MatrixXcd::Zero(rep.dim, rep.dim));
    for (size_t b = 0; b < facets.size(); ++b) {
        MatrixRep block = random_simplex_rep(facets[b], d, seed * 1000003ULL + b);
        for (size_t vi = 0; vi < facets[b].vertices().size(); ++vi) {
            int g = rep.presentation->gen_index(facets[b].vertices()[vi]);
            rep.images[g].block(b * d, b * d, d, d) = block.images[vi];
        }
    }
    return rep;
}

std::vector<MatrixXcd> clifford_gammas(int n) {
    int qubits = (n + 2) / 2;
    long dim = 1L << qubits;
    MatrixXcd X(2, 2), Y(2, 2), Z(2, 2);
    X << 0, 1, 1, 0;
    Y << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
    Z << 1, 0, 0, -1;

    auto kron = [](const MatrixXcd& a, const MatrixXcd& b) {
        MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
        for (long i = 0; i < a.rows(); ++i)
            for (long j = 0; j < a.cols(); ++j)
                out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        return out;
    };

    std::vector<MatrixXcd> gammas;
    for (int i = 0; i <= n; ++i) {
        MatrixXcd g = MatrixXcd::Identity(1, 1);
        int k = i / 2;
        for (int q = 0; q < k; ++q) g = kron(g, Z);
        g = kron(g, (i % 2 == 0) ? X : Y);
        for (int q = k + 1; q < qubits; ++q) g = kron(g, MatrixXcd::Identity(2, 2));
        if (g.rows() != dim) throw std::logic_error("clifford_gammas: dimension bookkeeping");
        gammas.push_back(std::move(g));
    }
    return gammas;
}

MatrixRep clifford_sphere_rep(int n) {
    if (n < 0) throw std::invalid_argument("clifford_sphere_rep: n < 0");
    auto gammas = clifford_gammas(n);
    long dim = gammas[0].rows();
    MatrixRep rep;
    rep.presentation = presentation_of(sphere_complex(n), Variant::Flag);
    rep.dim = static_cast<int>(dim);
    rep.images.assign(rep.presentation->num_generators(), MatrixXcd());
    double scale = 1.0 / (2.0 * (n + 1));
    MatrixXcd id = MatrixXcd::Identity(dim, dim);
    for (int i = 0; i <= n; ++i) {
        rep.images[rep.presentation->gen_index(sphere_vertex(i, true))] = scale * (id + gammas[i]);
        rep.images[rep.presentation->gen_index(sphere_vertex(i, false))] = scale * (id - gammas[i]);
    }
    return rep;
}

ResidualReport verify_homotopy(const HomotopyFamily& family, const MatrixRep& target_rep,
                               const HomotopyCheckOptions& opts, const ToleranceConfig& tol) {
    if (!(*family.target == *target_rep.presentation))
        throw std::invalid_argument("verify_homotopy: representation/target mismatch");
    if (opts.samples < 2) throw std::invalid_argument("verify_homotopy: need at least 2 samples");

    ResidualReport out;
    for (int k = 0; k < opts.samples; ++k) {
        double t = static_cast<double>(k) / (opts.samples - 1);
        MatrixRep at_t;
        at_t.presentation = family.source;
        at_t.dim = target_rep.dim;
        for (const auto& img : family.images) at_t.images.push_back(evaluate(img, target_rep, t));
        ResidualReport sub = verify_matrix_rep(at_t, tol);
        for (auto& e : sub.entries) e.name = "t=" + std::to_string(t) + ":" + e.name;
        out.merge(sub);
    }

    auto endpoint = [&](const GeneratorAssignment* named, double t, const char* tag) {
        if (!named) return;
        double worst = 0;
        for (size_t i = 0; i < family.images.size(); ++i) {
            MatrixXcd a = evaluate(family.images[i], target_rep, t);
            MatrixXcd b = evaluate(named->images[i], target_rep, 0.0);
            worst = std::max(worst, (a - b).operatorNorm());
        }
        out.add(std::string("endpoint:") + tag, worst, opts.eps_endpoint);
    };
    endpoint(opts.endpoint0, 0.0, "t=0");
    endpoint(opts.endpoint1, 1.0, "t=1");
    return out;
}

ResidualReport rotation_homotopy_check(int n, int samples, const ToleranceConfig& tol,
                                       double eps_endpoint) {
    if (n < 1) throw std::invalid_argument("rotation_homotopy_check: n >= 1 required");
    MatrixRep rep = clifford_sphere_rep(n);
    auto p = rep.presentation;
    int d = rep.dim;
    int ng = p->num_generators();

    GeneratorAssignment b0 = beta0_hom(n), b1 = beta1_hom(n), a1 = alpha1_hom(n);

    auto block2 = [&](const MatrixXcd& top, const MatrixXcd& bottom) {
        MatrixXcd m = MatrixXcd::Zero(2 * d, 2 * d);
        m.block(0, 0, d, d) = top;
        m.block(d, d, d, d) = bottom;
        return m;
    };

    std::vector<MatrixXcd> beta_imgs, alpha_imgs;
    for (int g = 0; g < ng; ++g) {
        beta_imgs.push_back(block2(evaluate(b0.images[g], rep), evaluate(b1.images[g], rep)));
        alpha_imgs.push_back(block2(rep.images[g], evaluate(a1.images[g], rep)));
    }

    int gp = p->gen_index(sphere_vertex(0, true));
    int gm = p->gen_index(sphere_vertex(0, false));

    ResidualReport out;
    for (int k = 0; k < samples; ++k) {
        double t = (M_PI / 2.0) * k / (samples - 1);
        MatrixXcd r = MatrixXcd::Zero(2 * d, 2 * d);
        double c = std::cos(t), s = std::sin(t);
        r.block(0, 0, d, d) = c * MatrixXcd::Identity(d, d);
        r.block(0, d, d, d) = -s * MatrixXcd::Identity(d, d);
        r.block(d, 0, d, d) = s * MatrixXcd::Identity(d, d);
        r.block(d, d, d, d) = c * MatrixXcd::Identity(d, d);

        MatrixRep at_t;
        at_t.presentation = p;
        at_t.dim = 2 * d;
        at_t.images = beta_imgs;
        at_t.images[gp] = r * beta_imgs[gp] * r.adjoint();
        at_t.images[gm] = r * beta_imgs[gm] * r.adjoint();

        ResidualReport sub = verify_matrix_rep(at_t, tol);
        for (auto& e : sub.entries) e.name = "t=" + std::to_string(t) + ":" + e.name;
        out.merge(sub);

        if (k == 0) {
            double worst = 0;
            for (int g = 0; g < ng; ++g)
                worst = std::max(worst, (at_t.images[g] - beta_imgs[g]).operatorNorm());
            out.add("endpoint:t=0 equals beta", worst, eps_endpoint);
        }
        if (k == samples - 1) {
            double worst = 0;
            for (int g = 0; g < ng; ++g)
                worst = std::max(worst, (at_t.images[g] - alpha_imgs[g]).operatorNorm());
            out.add("endpoint:t=pi/2 equals alpha", worst, eps_endpoint);
        }
    }
    return out;
}

double norm_sup_estimate(const NCPoly& element, const std::vector<MatrixRep>& reps, double t) {
    double m = 0;
    for (const auto& rep : reps) m = std::max(m, evaluate(element, rep, t).operatorNorm());
    return m;
}

}  // namespace nckit

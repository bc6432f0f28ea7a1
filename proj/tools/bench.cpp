// Timing comparison of the OpenMP kernels against their serial references:
// maximal clique enumeration and matrix relation verification.

#include <chrono>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "nckit/cliques.hpp"
#include "nckit/complex.hpp"
#include "nckit/numerics.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

nckit::AdjacencyMatrix random_graph(int n, double density, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    nckit::AdjacencyMatrix adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < density) adj[i][j] = adj[j][i] = true;
    return adj;
}

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        f();
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel timings"};
    int graph_n = 100;
    double density = 0.6;
    int rep_dim = 6;
    int sphere_n = 4;
    int reps = 3;
    unsigned long seed = 0;
    app.add_option("--graph-n", graph_n, "vertices in the random clique benchmark graph");
    app.add_option("--density", density, "edge density of the benchmark graph");
    app.add_option("--rep-dim", rep_dim, "block dimension of the random representation");
    app.add_option("--sphere-n", sphere_n, "sphere index for the representation benchmark");
    app.add_option("--reps", reps, "repetitions (best time is reported)");
    app.add_option("--seed", seed, "random seed");
    CLI11_PARSE(app, argc, argv);

    std::cout << "benchmark                         serial[s]  parallel[s]  speedup\n";

    {
        nckit::AdjacencyMatrix adj = random_graph(graph_n, density, seed);
        std::vector<std::vector<int>> serial_out, parallel_out;
        double ts = time_best_of(reps, [&] { serial_out = nckit::max_cliques_serial(adj); });
        double tp = time_best_of(reps, [&] { parallel_out = nckit::max_cliques_parallel(adj); });
        if (serial_out != parallel_out) {
            std::cerr << "clique outputs disagree\n";
            return 1;
        }
        std::printf("max cliques (n=%d, p=%.2f)      %9.4f  %11.4f  %7.2fx\n", graph_n, density,
                    ts, tp, ts / tp);
    }

    {
        nckit::SimplicialComplex sphere = nckit::sphere_complex(sphere_n);
        nckit::MatrixRep rep = nckit::random_complex_rep(sphere, rep_dim, seed);
        nckit::ResidualReport rs, rp;
        double ts = time_best_of(reps, [&] { rs = nckit::verify_matrix_rep_serial(rep); });
        double tp = time_best_of(reps, [&] { rp = nckit::verify_matrix_rep(rep); });
        if (std::abs(rs.max_residual() - rp.max_residual()) > 1e-14 ||
            rs.pass() != rp.pass()) {
            std::cerr << "verification outputs disagree\n";
            return 1;
        }
        std::printf("verify rep (sphere %d, d=%d)     %9.4f  %11.4f  %7.2fx\n", sphere_n, rep_dim,
                    ts, tp, ts / tp);
    }

    return 0;
}

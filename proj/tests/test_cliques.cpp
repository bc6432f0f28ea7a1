#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nckit/cliques.hpp"

using namespace nckit;

namespace {

AdjacencyMatrix graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    AdjacencyMatrix adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
    return adj;
}

AdjacencyMatrix random_graph(int n, double density, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    AdjacencyMatrix adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < density) adj[i][j] = adj[j][i] = true;
    return adj;
}

/// Brute-force maximal cliques: test every vertex subset.
std::vector<std::vector<int>> brute_cliques(const AdjacencyMatrix& adj) {
    int n = static_cast<int>(adj.size());
    auto is_clique = [&](unsigned mask) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && !adj[i][j]) return false;
        return true;
    };
    std::vector<std::vector<int>> out;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!is_clique(mask)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(mask >> v & 1) && is_clique(mask | (1u << v))) maximal = false;
        if (!maximal) continue;
        std::vector<int> clique;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) clique.push_back(v);
        out.push_back(std::move(clique));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("known graphs") {
    // complete graph: one clique
    CHECK(max_cliques_serial(graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}});
    // empty graph: isolated vertices come back as singletons
    CHECK(max_cliques_serial(graph(3, {})) == std::vector<std::vector<int>>{{0}, {1}, {2}});
    // 5-cycle: exactly the five edges
    auto c5 = max_cliques_serial(graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));
    CHECK(c5 == std::vector<std::vector<int>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    // two triangles sharing an edge
    auto tri = max_cliques_serial(graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(tri == std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}});
}

TEST_CASE("serial matches brute force") {
    for (unsigned long seed = 0; seed < 40; ++seed) {
        auto adj = random_graph(4 + seed % 9, 0.2 + 0.06 * (seed % 10), seed);
        CHECK(max_cliques_serial(adj) == brute_cliques(adj));
    }
}

TEST_CASE("parallel matches serial") {
    for (unsigned long seed = 0; seed < 20; ++seed) {
        auto adj = random_graph(30 + 3 * (seed % 7), 0.5, seed * 101 + 1);
        CHECK(max_cliques_parallel(adj) == max_cliques_serial(adj));
    }
}

TEST_CASE("dispatch honors the process-wide switch") {
    auto adj = random_graph(20, 0.4, 99);
    auto expected = max_cliques_serial(adj);
    bool was = parallel_enabled();
    set_parallel_enabled(false);
    CHECK(max_cliques(adj) == expected);
    set_parallel_enabled(true);
    CHECK(max_cliques(adj) == expected);
    set_parallel_enabled(was);
}

TEST_CASE("empty graph") {
    CHECK(max_cliques_serial({}).empty());
    CHECK(max_cliques_parallel({}).empty());
}

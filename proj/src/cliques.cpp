#include "nckit/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nckit {

namespace {

std::atomic<bool> g_parallel{true};

using Bits = std::vector<uint64_t>;

Bits make_bits(int n) { return Bits((n + 63) / 64, 0); }
void bit_set(Bits& b, int i) { b[i / 64] |= uint64_t(1) << (i % 64); }
bool bit_get(const Bits& b, int i) { return (b[i / 64] >> (i % 64)) & 1; }
bool bits_empty(const Bits& b) {
    for (auto w : b) if (w) return false;
    return true;
}
Bits bits_and(const Bits& a, const Bits& b) {
    Bits r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
    return r;
}
int bits_count(const Bits& b) {
    int c = 0;
    for (auto w : b) c += __builtin_popcountll(w);
    return c;
}

struct BKContext {
    int n;
    std::vector<Bits> adj;
    std::vector<std::vector<int>>* out;

    void expand(Bits r, Bits p, Bits x) {
        if (bits_empty(p) && bits_empty(x)) {
            std::vector<int> clique;
            for (int i = 0; i < n; ++i)
                if (bit_get(r, i)) clique.push_back(i);
            out->push_back(std::move(clique));
            return;
        }
        // pivot: vertex of P|X with the most neighbours in P
        int pivot = -1, best = -1;
        for (int u = 0; u < n; ++u) {
            if (!bit_get(p, u) && !bit_get(x, u)) continue;
            int c = bits_count(bits_and(p, adj[u]));
            if (c > best) { best = c; pivot = u; }
        }
        for (int v = 0; v < n; ++v) {
            if (!bit_get(p, v) || bit_get(adj[pivot], v)) continue;
            Bits r2 = r;
            bit_set(r2, v);
            expand(r2, bits_and(p, adj[v]), bits_and(x, adj[v]));
            p[v / 64] &= ~(uint64_t(1) << (v % 64));
            bit_set(x, v);
        }
    }
};

std::vector<Bits> to_bits(const AdjacencyMatrix& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<Bits> a(n, make_bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && adj[i][j]) bit_set(a[i], j);
    return a;
}

}  // namespace

void set_parallel_enabled(bool on) { g_parallel = on; }

bool parallel_enabled() {
    static const bool env_serial = [] {
        const char* s = std::getenv("NCKIT_SERIAL");
        return s && s[0] == '1';
    }();
    return g_parallel && !env_serial;
}

std::vector<std::vector<int>> max_cliques_serial(const AdjacencyMatrix& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 0) return {};
    std::vector<std::vector<int>> out;
    BKContext ctx{n, to_bits(adj), &out};
    Bits p = make_bits(n);
    for (int i = 0; i < n; ++i) bit_set(p, i);
    ctx.expand(make_bits(n), p, make_bits(n));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> max_cliques_parallel(const AdjacencyMatrix& adj) {
    int n = static_cast<int>(adj.size());
    auto bits = to_bits(adj);
    // One subtree per seed vertex v: cliques whose smallest vertex is v.
    std::vector<std::vector<std::vector<int>>> per_seed(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int v = 0; v < n; ++v) {
        BKContext ctx{n, bits, &per_seed[v]};
        Bits r = make_bits(n);
        bit_set(r, v);
        Bits p = make_bits(n), x = make_bits(n);
        for (int u = 0; u < n; ++u) {
            if (!bit_get(bits[v], u)) continue;
            if (u > v) bit_set(p, u);
            else bit_set(x, u);
        }
        ctx.expand(r, p, x);
    }
    std::vector<std::vector<int>> out;
    for (auto& part : per_seed)
        for (auto& c : part) out.push_back(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> max_cliques(const AdjacencyMatrix& adj) {
    return parallel_enabled() ? max_cliques_parallel(adj) : max_cliques_serial(adj);
}

}  // namespace nckit

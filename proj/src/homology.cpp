#include "nckit/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nckit {

ChainComplex chain_complex(const SimplicialComplex& sigma) {
    ChainComplex c;
    int dim = sigma.dimension();
    c.bases.resize(dim + 1);
    for (int k = 0; k <= dim; ++k) c.bases[k] = sigma.simplexes_of_dim(k);

    c.boundaries.resize(dim + 1);
    c.boundaries[0] = IntMatrix{};  // no (-1)-chains
    for (int k = 1; k <= dim; ++k) {
        std::map<Simplex, size_t> index;
        for (size_t i = 0; i < c.bases[k - 1].size(); ++i) index[c.bases[k - 1][i]] = i;
        IntMatrix d(c.bases[k - 1].size(), std::vector<BigInt>(c.bases[k].size(), 0));
        for (size_t j = 0; j < c.bases[k].size(); ++j) {
            const auto& verts = c.bases[k][j].vertices();
            for (size_t drop = 0; drop < verts.size(); ++drop) {
                std::vector<VertexId> face;
                for (size_t i = 0; i < verts.size(); ++i)
                    if (i != drop) face.push_back(verts[i]);
                size_t row = index.at(Simplex(face));
                d[row][j] = (drop % 2 == 0) ? 1 : -1;
            }
        }
        c.boundaries[k] = std::move(d);
    }

    // d_{k} d_{k+1} = 0, checked exactly on construction
    for (int k = 1; k < dim; ++k) {
        const IntMatrix& a = c.boundaries[k];
        const IntMatrix& b = c.boundaries[k + 1];
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < (b.empty() ? 0 : b[0].size()); ++j) {
                BigInt s = 0;
                for (size_t l = 0; l < b.size(); ++l) s += a[i][l] * b[l][j];
                if (s != 0) throw std::logic_error("chain_complex: boundary of boundary nonzero");
            }
    }
    return c;
}

long euler_characteristic(const ChainComplex& c) {
    long chi = 0;
    for (size_t k = 0; k < c.bases.size(); ++k) {
        long n = static_cast<long>(c.bases[k].size());
        chi += (k % 2 == 0) ? n : -n;
    }
    return chi;
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
    SmithResult out;
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t t = 0;  // current pivot slot
    while (t < rows && t < cols) {
        // find nonzero entry of least absolute value in the remaining block
        size_t pi = t, pj = t;
        BigInt best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (best == 0 || abs_big(m[i][j]) < best)) {
                    best = abs_big(m[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(m[t], m[pi]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            BigInt q = m[i][t] / m[t][t];
            for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            BigInt q = m[t][j] / m[t][t];
            for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // re-run with a smaller pivot

        // pivot must divide every remaining entry for the factor chain
        bool divides = true;
        for (size_t i = t + 1; i < rows && divides; ++i)
            for (size_t j = t + 1; j < cols; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    // fold the offending row into row t and restart this slot
                    for (size_t l = t; l < cols; ++l) m[t][l] += m[i][l];
                    divides = false;
                    break;
                }
        if (!divides) continue;

        if (m[t][t] < 0) m[t][t] = -m[t][t];
        out.invariant_factors.push_back(m[t][t]);
        ++t;
    }
    out.rank = static_cast<int>(out.invariant_factors.size());
    return out;
}

HomologyResult homology(const SimplicialComplex& sigma, bool reduced) {
    ChainComplex c = chain_complex(sigma);
    int dim = c.top_dim();
    HomologyResult h;
    h.reduced = reduced;
    h.betti.assign(dim + 1, 0);
    h.torsion.assign(dim + 1, {});

    std::vector<SmithResult> snf(dim + 2);
    for (int k = 1; k <= dim; ++k) snf[k] = smith_normal_form(c.boundaries[k]);

    for (int k = 0; k <= dim; ++k) {
        long nk = static_cast<long>(c.bases[k].size());
        long rank_dk = (k >= 1) ? snf[k].rank : 0;
        long rank_dk1 = (k + 1 <= dim) ? snf[k + 1].rank : 0;
        h.betti[k] = nk - rank_dk - rank_dk1;
        if (k + 1 <= dim)
            for (const auto& d : snf[k + 1].invariant_factors)
                if (d > 1) h.torsion[k].push_back(d);
    }
    if (reduced && !h.betti.empty()) h.betti[0] -= 1;
    return h;
}

KTheoryRanks rational_k_ranks(const SimplicialComplex& sigma) {
    HomologyResult h = homology(sigma);
    KTheoryRanks r;
    for (size_t k = 0; k < h.betti.size(); ++k)
        (k % 2 == 0 ? r.rank_K0 : r.rank_K1) += h.betti[k];
    return r;
}

}  // namespace nckit

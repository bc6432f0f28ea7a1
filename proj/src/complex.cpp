#include "nckit/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nckit/cliques.hpp"

namespace nckit {

Simplex::Simplex(std::vector<VertexId> verts) : verts_(std::move(verts)) {
    if (verts_.empty()) throw std::invalid_argument("Simplex: empty vertex set");
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
}

bool Simplex::contains_vertex(const VertexId& v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::subset_of(const Simplex& o) const {
    return std::includes(o.verts_.begin(), o.verts_.end(), verts_.begin(), verts_.end());
}

std::string Simplex::to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < verts_.size(); ++i) {
        if (i) s += ",";
        s += verts_[i].to_string();
    }
    return s + "}";
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> facets,
                                                  const ComplexLimits& limits) {
    if (facets.empty()) throw std::invalid_argument("from_maximal: no facets");
    if (facets.size() > limits.facet_cap)
        throw std::runtime_error("facet cap exceeded (" + std::to_string(facets.size()) + ")");
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // absorb contained facets
    std::vector<Simplex> maximal;
    for (size_t i = 0; i < facets.size(); ++i) {
        bool contained = false;
        for (size_t j = 0; j < facets.size() && !contained; ++j)
            if (i != j && facets[i].subset_of(facets[j]) && facets[i] != facets[j])
                contained = true;
        if (!contained) maximal.push_back(facets[i]);
    }
    SimplicialComplex c;
    c.facets_ = std::move(maximal);
    std::set<VertexId> vs;
    for (const auto& f : c.facets_)
        for (const auto& v : f.vertices()) vs.insert(v);
    c.vertices_.assign(vs.begin(), vs.end());
    return c;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, f.dim());
    return d;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    for (const auto& f : facets_)
        if (s.subset_of(f)) return true;
    return false;
}

bool SimplicialComplex::has_vertex(const VertexId& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::has_edge(const VertexId& a, const VertexId& b) const {
    if (a == b) return has_vertex(a);
    return contains(Simplex({a, b}));
}

SimplicialComplex SimplicialComplex::skeleton(int k, const ComplexLimits& limits) const {
    if (k < 0) throw std::invalid_argument("skeleton: negative k");
    if (k >= dimension()) return *this;
    std::vector<Simplex> facets;
    std::set<Simplex> seen;
    for (const auto& f : facets_) {
        if (f.dim() <= k) {
            if (seen.insert(f).second) facets.push_back(f);
            continue;
        }
        // all (k+1)-subsets of f
        const auto& vs = f.vertices();
        int n = static_cast<int>(vs.size());
        std::vector<int> idx(k + 1);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            std::vector<VertexId> sub;
            for (int i : idx) sub.push_back(vs[i]);
            Simplex s(std::move(sub));
            if (seen.insert(s).second) facets.push_back(s);
            int i = k;
            while (i >= 0 && idx[i] == n - (k + 1) + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j <= k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (facets.size() > limits.facet_cap) throw std::runtime_error("facet cap exceeded");
    }
    return from_maximal(std::move(facets), limits);
}

SimplicialComplex SimplicialComplex::flag_saturation(const ComplexLimits& limits) const {
    int n = static_cast<int>(vertices_.size());
    AdjacencyMatrix adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (contains(Simplex({vertices_[i], vertices_[j]}))) adj[i][j] = adj[j][i] = true;
    auto cliques = max_cliques(adj);
    if (cliques.size() > limits.facet_cap) throw std::runtime_error("facet cap exceeded");
    std::vector<Simplex> facets;
    for (const auto& c : cliques) {
        std::vector<VertexId> vs;
        for (int i : c) vs.push_back(vertices_[i]);
        facets.emplace_back(std::move(vs));
    }
    return from_maximal(std::move(facets), limits);
}

bool SimplicialComplex::is_full() const { return *this == flag_saturation(); }

SimplicialComplex SimplicialComplex::barycentric_subdivision(const ComplexLimits& limits) const {
    auto simplex_label = [](const Simplex& s) {
        std::string lbl;
        for (const auto& v : s.vertices()) {
            if (!lbl.empty()) lbl += "|";
            lbl += v.to_string();
        }
        return VertexId(lbl);
    };
    // facets = maximal inclusion chains; one per (facet, vertex permutation)
    std::vector<Simplex> chains;
    for (const auto& f : facets_) {
        std::vector<VertexId> perm = f.vertices();
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<VertexId> chain;
            std::vector<VertexId> prefix;
            for (const auto& v : perm) {
                prefix.push_back(v);
                chain.push_back(simplex_label(Simplex(prefix)));
            }
            chains.emplace_back(std::move(chain));
            if (chains.size() > limits.facet_cap) throw std::runtime_error("facet cap exceeded");
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return from_maximal(std::move(chains), limits);
}

std::vector<Simplex> SimplicialComplex::all_simplexes(const ComplexLimits& limits) const {
    std::set<Simplex> all;
    for (const auto& f : facets_) {
        const auto& vs = f.vertices();
        size_t n = vs.size();
        if (n > 30) throw std::runtime_error("all_simplexes: facet too large to enumerate");
        for (uint64_t mask = 1; mask < (uint64_t(1) << n); ++mask) {
            std::vector<VertexId> sub;
            for (size_t i = 0; i < n; ++i)
                if (mask & (uint64_t(1) << i)) sub.push_back(vs[i]);
            all.insert(Simplex(std::move(sub)));
            if (all.size() > limits.facet_cap) throw std::runtime_error("simplex cap exceeded");
        }
    }
    return {all.begin(), all.end()};
}

std::vector<Simplex> SimplicialComplex::simplexes_of_dim(int k, const ComplexLimits& limits) const {
    std::vector<Simplex> out;
    for (const auto& s : all_simplexes(limits))
        if (s.dim() == k) out.push_back(s);
    return out;
}

bool SimplicialComplex::has_subcomplex(const SimplicialComplex& sub) const {
    for (const auto& f : sub.maximal_simplexes())
        if (!contains(f)) return false;
    return true;
}

MapVerification verify_simplicial_map(const SimplicialMapDesc& m) {
    MapVerification r;
    for (const auto& v : m.source.vertices()) {
        auto it = m.vertex_map.find(v);
        if (it == m.vertex_map.end()) {
            r.undefined_vertex = true;
            r.violation = "vertex " + v.to_string() + " has no image";
            return r;
        }
        if (!m.target.has_vertex(it->second)) {
            r.violation = "image " + it->second.to_string() + " is not a target vertex";
            return r;
        }
    }
    for (const auto& f : m.source.maximal_simplexes()) {
        std::vector<VertexId> img;
        for (const auto& v : f.vertices()) img.push_back(m.vertex_map.at(v));
        Simplex s(std::move(img));
        if (!m.target.contains(s)) {
            r.violation = "image of " + f.to_string() + " = " + s.to_string() + " is not a simplex";
            return r;
        }
    }
    // finite complexes: preimages are automatically finite
    r.ok = true;
    return r;
}

SimplicialMapDesc compose_maps(const SimplicialMapDesc& first, const SimplicialMapDesc& second) {
    SimplicialMapDesc c;
    c.source = first.source;
    c.target = second.target;
    for (const auto& [v, w] : first.vertex_map) {
        auto it = second.vertex_map.find(w);
        if (it != second.vertex_map.end()) c.vertex_map[v] = it->second;
    }
    return c;
}

std::vector<VertexId> RealizationPoint::support(double tol) const {
    std::vector<VertexId> s;
    for (const auto& [v, w] : weights)
        if (std::abs(w) > tol) s.push_back(v);
    return s;
}

bool realization_contains(const SimplicialComplex& sigma, const RealizationPoint& p) {
    double sum = 0;
    for (const auto& [v, w] : p.weights) {
        if (w < -RealizationPoint::eps_real || w > 1 + RealizationPoint::eps_real) return false;
        sum += w;
    }
    if (std::abs(sum - 1.0) > RealizationPoint::eps_real) return false;
    auto supp = p.support();
    if (supp.empty()) return false;
    return sigma.contains(Simplex(supp));
}

VertexId sphere_vertex(int i, bool plus) {
    return VertexId(std::to_string(i) + (plus ? "+" : "-"));
}

SimplicialComplex sphere_complex(int n) {
    if (n < 0) throw std::invalid_argument("sphere_complex: n < 0");
    // facets: one sign choice per index, 2^(n+1) n-simplexes
    std::vector<Simplex> facets;
    for (uint64_t mask = 0; mask < (uint64_t(1) << (n + 1)); ++mask) {
        std::vector<VertexId> vs;
        for (int i = 0; i <= n; ++i) vs.push_back(sphere_vertex(i, mask & (uint64_t(1) << i)));
        facets.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_maximal(std::move(facets));
}

}  // namespace nckit

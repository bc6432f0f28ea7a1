#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nckit {

/// Vertex label: an integer or a printable string. Integers order before
/// strings so canonical forms are deterministic for mixed label sets.
struct VertexId {
    bool is_int = true;
    long num = 0;
    std::string str;

    VertexId() = default;
    VertexId(long n) : is_int(true), num(n) {}
    VertexId(int n) : is_int(true), num(n) {}
    VertexId(std::string s) : is_int(false), str(std::move(s)) {}
    VertexId(const char* s) : is_int(false), str(s) {}

    std::string to_string() const { return is_int ? std::to_string(num) : str; }

    auto operator<=>(const VertexId& o) const {
        if (is_int != o.is_int) return is_int ? std::strong_ordering::less : std::strong_ordering::greater;
        if (is_int) return num <=> o.num;
        return str <=> o.str;
    }
    bool operator==(const VertexId& o) const = default;
};

/// Nonempty finite vertex set in sorted canonical form.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<VertexId> verts);
    Simplex(std::initializer_list<VertexId> verts) : Simplex(std::vector<VertexId>(verts)) {}

    const std::vector<VertexId>& vertices() const { return verts_; }
    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    size_t size() const { return verts_.size(); }
    bool contains_vertex(const VertexId& v) const;
    bool subset_of(const Simplex& o) const;

    auto operator<=>(const Simplex& o) const = default;
    std::string to_string() const;

private:
    std::vector<VertexId> verts_;
};

struct ComplexLimits {
    size_t facet_cap = 1'000'000;
};

/// Locally finite simplicial complex stored by its maximal simplexes.
/// Downward closure is implicit: a set is a simplex iff it sits inside
/// some stored facet.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_maximal(std::vector<Simplex> facets,
                                          const ComplexLimits& limits = {});

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Simplex>& maximal_simplexes() const { return facets_; }
    int dimension() const;
    bool empty() const { return facets_.empty(); }

    bool contains(const Simplex& s) const;
    bool has_vertex(const VertexId& v) const;
    bool has_edge(const VertexId& a, const VertexId& b) const;

    SimplicialComplex skeleton(int k, const ComplexLimits& limits = {}) const;
    SimplicialComplex flag_saturation(const ComplexLimits& limits = {}) const;
    bool is_full() const;
    SimplicialComplex barycentric_subdivision(const ComplexLimits& limits = {}) const;

    /// Every simplex of the complex, by full enumeration. Throws if the
    /// count would exceed the cap; meant for finite desk-scale complexes.
    std::vector<Simplex> all_simplexes(const ComplexLimits& limits = {}) const;
    std::vector<Simplex> simplexes_of_dim(int k, const ComplexLimits& limits = {}) const;

    /// True iff every simplex of `sub` is a simplex of *this.
    bool has_subcomplex(const SimplicialComplex& sub) const;

    bool operator==(const SimplicialComplex& o) const {
        return vertices_ == o.vertices_ && facets_ == o.facets_;
    }

private:
    std::vector<VertexId> vertices_;  // sorted
    std::vector<Simplex> facets_;     // sorted, pairwise non-contained
};

/// Vertex map between two complexes, to be checked for simpliciality.
struct SimplicialMapDesc {
    SimplicialComplex source;
    SimplicialComplex target;
    std::map<VertexId, VertexId> vertex_map;
};

struct MapVerification {
    bool ok = false;
    bool undefined_vertex = false;  // error distinct from "not simplicial"
    std::string violation;          // empty if ok
};

MapVerification verify_simplicial_map(const SimplicialMapDesc& m);

/// Compose two vertex maps (first, then second). Preconditions are not
/// checked here; pass the result through verify_simplicial_map.
SimplicialMapDesc compose_maps(const SimplicialMapDesc& first, const SimplicialMapDesc& second);

/// Finitely supported weight function on the vertex set.
struct RealizationPoint {
    std::map<VertexId, double> weights;
    static constexpr double eps_real = 1e-9;
    std::vector<VertexId> support(double tol = 0.0) const;
};

bool realization_contains(const SimplicialComplex& sigma, const RealizationPoint& p);

/// Simplicial model of the n-sphere: vertices i^+ / i^- for i = 0..n and
/// exactly the pairs {i^+, i^-} are non-edges.
SimplicialComplex sphere_complex(int n);

/// Label of vertex i^+ / i^- in sphere_complex.
VertexId sphere_vertex(int i, bool plus);

}  // namespace nckit

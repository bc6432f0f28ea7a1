#include "nckit/assignments.hpp"

#include <stdexcept>

namespace nckit {

GeneratorAssignment identity_assignment(const PresentationPtr& p) {
    GeneratorAssignment a;
    a.source = a.target = p;
    for (int i = 0; i < p->num_generators(); ++i) a.images.push_back(NCPoly::generator(i));
    return a;
}

GeneratorAssignment evaluation_hom(const SimplicialComplex& sigma, const SimplicialComplex& sigma0,
                                   Variant variant) {
    if (!sigma.has_subcomplex(sigma0))
        throw std::invalid_argument("evaluation_hom: not a subcomplex");
    GeneratorAssignment a;
    a.source = presentation_of(sigma, variant);
    a.target = presentation_of(sigma0, variant);
    for (const auto& v : a.source->generators()) {
        int j = a.target->gen_index(v);
        a.images.push_back(j < 0 ? NCPoly() : NCPoly::generator(j));
    }
    return a;
}

GeneratorAssignment induced_hom(const SimplicialMapDesc& m, Variant variant) {
    auto check = verify_simplicial_map(m);
    if (!check.ok)
        throw std::invalid_argument("induced_hom: map is not simplicial (" + check.violation + ")");
    GeneratorAssignment a;
    a.source = presentation_of(m.target, variant);
    a.target = presentation_of(m.source, variant);
    for (const auto& s : a.source->generators()) {
        NCPoly img;
        for (const auto& [t, ft] : m.vertex_map)
            if (ft == s) img += NCPoly::generator(a.target->gen_index(t));
        a.images.push_back(img);
    }
    return a;
}

GeneratorAssignment character_at_vertex(const PresentationPtr& p, const VertexId& s) {
    int i = p->gen_index(s);
    if (i < 0) throw std::invalid_argument("character_at_vertex: unknown vertex " + s.to_string());
    GeneratorAssignment a;
    a.source = p;
    a.target = scalar_presentation();
    for (int g = 0; g < p->num_generators(); ++g)
        a.images.push_back(g == i ? NCPoly::generator(0) : NCPoly());
    return a;
}

GeneratorAssignment compose(const GeneratorAssignment& outer, const GeneratorAssignment& inner) {
    if (!(*outer.target == *inner.source))
        throw std::invalid_argument("compose: presentation mismatch");
    GeneratorAssignment a;
    a.source = outer.source;
    a.target = inner.target;
    for (const auto& img : outer.images) {
        NCPoly out;
        for (const auto& [w, c] : img.terms()) {
            NCPoly p = NCPoly::unit();
            for (int g : w) p = p * inner.images[g];
            out += p * c;
        }
        a.images.push_back(out);
    }
    return a;
}

GeneratorAssignment simplex_cp_lift_hom(const SimplicialComplex& sigma, const Simplex& delta) {
    if (!sigma.contains(delta)) throw std::invalid_argument("simplex_cp_lift_hom: not a simplex");
    GeneratorAssignment a;
    a.source = presentation_of(SimplicialComplex::from_maximal({delta}), Variant::Full);
    a.target = presentation_of(sigma, Variant::Full);
    Rational inv(1, static_cast<long>(delta.size()));
    NCPoly correction = NCPoly::unit();
    for (const auto& v : delta.vertices())
        correction = correction - NCPoly::generator(a.target->gen_index(v));
    for (const auto& v : delta.vertices()) {
        NCPoly img = NCPoly::generator(a.target->gen_index(v)) + correction * RatPoly(inv);
        a.images.push_back(img);
    }
    return a;
}

HomotopyFamily contraction_homotopy(const Simplex& delta) {
    auto p = presentation_of(SimplicialComplex::from_maximal({delta}), Variant::Full);
    HomotopyFamily f;
    f.source = f.target = p;
    RatPoly t = RatPoly::t();
    RatPoly rest = RatPoly::one_minus_t() * Rational(1, static_cast<long>(delta.size()));
    for (int i = 0; i < p->num_generators(); ++i)
        f.images.push_back(NCPoly::monomial({i}, t) + NCPoly::monomial({}, rest));
    return f;
}

HomotopyFamily face_shrink_family(const Simplex& delta, const VertexId& t_i) {
    if (!delta.contains_vertex(t_i))
        throw std::invalid_argument("face_shrink_family: vertex not in the simplex");
    if (delta.size() < 2)
        throw std::invalid_argument("face_shrink_family: simplex has no proper face");
    std::vector<VertexId> face_verts;
    for (const auto& v : delta.vertices())
        if (!(v == t_i)) face_verts.push_back(v);
    Simplex face(face_verts);
    HomotopyFamily f;
    f.source = presentation_of(SimplicialComplex::from_maximal({delta}), Variant::Full);
    f.target = presentation_of(SimplicialComplex::from_maximal({face}), Variant::Full);
    for (const auto& v : f.source->generators()) {
        if (v == t_i) {
            f.images.push_back(NCPoly::monomial({}, RatPoly::t()));
        } else {
            f.images.push_back(NCPoly::monomial({f.target->gen_index(v)}, RatPoly::one_minus_t()));
        }
    }
    return f;
}

PresentationPtr sphere_presentation(int n) {
    return presentation_of(sphere_complex(n), Variant::Flag);
}

namespace {

struct SphereGens {
    PresentationPtr p;
    std::vector<int> plus, minus;  // generator indices of i^+ / i^-
};

SphereGens sphere_gens(int n) {
    SphereGens g;
    g.p = sphere_presentation(n);
    for (int i = 0; i <= n; ++i) {
        g.plus.push_back(g.p->gen_index(sphere_vertex(i, true)));
        g.minus.push_back(g.p->gen_index(sphere_vertex(i, false)));
    }
    return g;
}

}  // namespace

GeneratorAssignment kappa(int n, int i) {
    auto g = sphere_gens(n);
    GeneratorAssignment a;
    a.source = a.target = g.p;
    for (int k = 0; k < g.p->num_generators(); ++k)
        a.images.push_back(k == g.plus[i] ? NCPoly::unit() : NCPoly());
    return a;
}

namespace {

// fold h_{j^+} |-> h_{j^+} + h_{j^-}, h_{j^-} |-> 0 for j in `folded`,
// identity elsewhere
GeneratorAssignment fold_hom(int n, const std::vector<int>& folded) {
    auto g = sphere_gens(n);
    GeneratorAssignment a;
    a.source = a.target = g.p;
    a.images.assign(g.p->num_generators(), NCPoly());
    for (int k = 0; k < g.p->num_generators(); ++k) a.images[k] = NCPoly::generator(k);
    for (int j : folded) {
        a.images[g.plus[j]] = NCPoly::generator(g.plus[j]) + NCPoly::generator(g.minus[j]);
        a.images[g.minus[j]] = NCPoly();
    }
    return a;
}

}  // namespace

GeneratorAssignment alpha1_hom(int n) {
    if (n < 1) throw std::invalid_argument("alpha1_hom: needs n >= 1");
    return fold_hom(n, {0, 1});
}
GeneratorAssignment beta0_hom(int n) {
    if (n < 1) throw std::invalid_argument("beta0_hom: needs n >= 1");
    return fold_hom(n, {0});
}
GeneratorAssignment beta1_hom(int n) {
    if (n < 1) throw std::invalid_argument("beta1_hom: needs n >= 1");
    return fold_hom(n, {1});
}

SphereHomotopies sphere_homotopies(int n) {
    if (n < 1) throw std::invalid_argument("sphere_homotopies: the formulas use indices 0 and 1");
    auto g = sphere_gens(n);
    RatPoly t = RatPoly::t();
    RatPoly omt = RatPoly::one_minus_t();

    // fold index j0 with a unit correction, scale everything else by t;
    // j1 < 0 means "no second fold"
    auto family = [&](int j0, int j1) {
        HomotopyFamily f;
        f.source = f.target = g.p;
        f.images.assign(g.p->num_generators(), NCPoly());
        for (int k = 0; k < g.p->num_generators(); ++k)
            f.images[k] = NCPoly::monomial({k}, t);
        f.images[g.plus[j0]] = NCPoly::monomial({g.plus[j0]}, t) +
                               NCPoly::monomial({g.minus[j0]}, t) + NCPoly::monomial({}, omt);
        f.images[g.minus[j0]] = NCPoly();
        if (j1 >= 0) {
            f.images[g.plus[j1]] =
                NCPoly::monomial({g.plus[j1]}, t) + NCPoly::monomial({g.minus[j1]}, t);
            f.images[g.minus[j1]] = NCPoly();
        }
        return f;
    };

    SphereHomotopies h;
    h.alpha1_to_kappa0 = family(0, 1);
    h.beta0_to_kappa0 = family(0, -1);
    h.beta1_to_kappa1 = family(1, -1);
    return h;
}

}  // namespace nckit

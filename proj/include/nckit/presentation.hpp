#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nckit/complex.hpp"
#include "nckit/ratpoly.hpp"

namespace nckit {

enum class Variant { Full, Flag, Abelian };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& s);

/// A word in the generators (indices into the presentation's generator
/// list); the empty word is the formal unit.
using Monomial = std::vector<int>;

/// Universal algebra presentation attached to a complex. The Flag variant
/// computes against the flag saturation of the given complex.
class AlgebraPresentation {
public:
    AlgebraPresentation(SimplicialComplex complex, Variant variant);

    const SimplicialComplex& complex() const { return complex_; }
    /// Saturated complex for Flag, the complex itself otherwise.
    const SimplicialComplex& effective_complex() const { return effective_; }
    Variant variant() const { return variant_; }
    bool unital() const { return true; }  // finite vertex sets only

    int num_generators() const { return static_cast<int>(gens_.size()); }
    const std::vector<VertexId>& generators() const { return gens_; }
    const VertexId& gen_label(int i) const { return gens_[i]; }
    int gen_index(const VertexId& v) const;  // -1 if unknown

    bool is_simplex_indices(const std::vector<int>& distinct_sorted) const;
    bool has_edge_indices(int i, int j) const;

    /// Letter-set rule (Full/Abelian) or adjacent-pair rule (Flag).
    bool forced_zero(const Monomial& w) const;

    /// Minimal non-faces: vertex sets that are not simplexes while every
    /// proper subset is. Empty for a full simplex.
    const std::vector<std::vector<int>>& minimal_nonfaces() const;

    std::string monomial_str(const Monomial& w) const;

    bool operator==(const AlgebraPresentation& o) const {
        return variant_ == o.variant_ && complex_ == o.complex_;
    }

private:
    SimplicialComplex complex_;
    SimplicialComplex effective_;
    Variant variant_;
    std::vector<VertexId> gens_;
    std::map<VertexId, int> index_;
    mutable std::optional<std::vector<std::vector<int>>> nonfaces_;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

PresentationPtr presentation_of(const SimplicialComplex& sigma, Variant variant);
/// One-point presentation standing in for the scalars.
PresentationPtr scalar_presentation();

/// Number of pairwise distinct letters.
int skeleton_degree(const Monomial& w);
bool in_ideal(const AlgebraPresentation& p, const Monomial& w, int n);
/// J_Delta membership: every vertex of the simplex occurs in the word.
bool in_J_delta(const Simplex& delta, const AlgebraPresentation& p, const Monomial& w);

struct VanishVerdict {
    bool zero = false;
    /// For Full/Abelian NotForcedZero: interior point of the letter-set
    /// simplex whose character is positive on the abelianized monomial.
    std::optional<RealizationPoint> certificate;
};

VanishVerdict monomial_vanishes(const AlgebraPresentation& p, const Monomial& w);

/// Noncommutative polynomial: finitely many words with RatPoly coefficients.
class NCPoly {
public:
    NCPoly() = default;
    static NCPoly unit() { return monomial({}); }
    static NCPoly monomial(Monomial w, RatPoly c = RatPoly(1));
    static NCPoly generator(int i) { return monomial({i}); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, RatPoly>& terms() const { return terms_; }

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly operator*(const RatPoly& c) const;
    NCPoly& operator+=(const NCPoly& o) { *this = *this + o; return *this; }

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

    /// Specialize the formal parameter t.
    NCPoly at(const Rational& t) const;

    std::string str(const AlgebraPresentation& p) const;

private:
    void add_term(Monomial w, const RatPoly& c);
    std::map<Monomial, RatPoly> terms_;
};

/// Reduce modulo the target's rules: monomial vanishing, commutativity
/// (Abelian target), and the literal pattern "sum of all generators = 1"
/// applied as prefix or suffix. Sound; not a decision procedure.
NCPoly normal_form(const NCPoly& poly, const AlgebraPresentation& target);

/// Symbolic images of source generators inside the target presentation.
/// Coefficients may involve the parameter t; a plain assignment has
/// constant coefficients and a HomotopyFamily is the same object with
/// genuinely t-dependent ones.
struct GeneratorAssignment {
    PresentationPtr source;
    PresentationPtr target;
    std::vector<NCPoly> images;  // indexed by source generator

    GeneratorAssignment at(const Rational& t) const;
    bool same_images(const GeneratorAssignment& o) const;
};

using HomotopyFamily = GeneratorAssignment;

enum class Verdict { Verified, Undetermined, Failed };

struct VerifyResult {
    Verdict verdict = Verdict::Undetermined;
    std::string relation;  // offending or undetermined relation
    NCPoly residual;
    std::string note;
};

VerifyResult verify_assignment(const GeneratorAssignment& a);

}  // namespace nckit

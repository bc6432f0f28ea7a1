#pragma once

#include <Eigen/Dense>
#include <map>

#include "nckit/complex.hpp"
#include "nckit/group.hpp"
#include "nckit/presentation.hpp"

namespace nckit {

/// Window of the group-equivariant complex: vertices are group elements of
/// the window, simplexes are the sets with all pairwise quotients in F.
struct SigmaFWindow {
    GroupOracle group;
    GammaSubset f;
    std::vector<GroupElem> window;           // sorted
    SimplicialComplex complex;               // vertices labelled via to_string
    std::map<VertexId, GroupElem> vertex_to_elem;

    VertexId label_of(const GroupElem& e) const { return VertexId(group.to_string(e)); }
};

SigmaFWindow build_sigma_F(const GroupOracle& g, const GammaSubset& f, const WindowSpec& w);

/// Full / Flag / Abelian presentation of the windowed complex. By design the
/// window complex is already a flag complex, so Full and Flag relations agree
/// at the level of forced-zero monomials.
PresentationPtr E_F_presentation(const SigmaFWindow& w, Variant variant);

/// Left translation t |-> s*t applied vertex-wise. Throws if some translated
/// vertex leaves the window.
Simplex act(const SigmaFWindow& w, const GroupElem& s, const Simplex& simplex);

/// Orbit partition of a list of simplexes under the full finite group, with
/// orbit-stabilizer bookkeeping.
OrbitInfo orbits(const SigmaFWindow& w, const std::vector<Simplex>& simplexes);

/// Consistency check for words h_s h_{t_1} ... h_{t_{n-1}} h_t in the flag
/// presentation: the rewriting verdict must agree with a breadth-first walk
/// oracle over F-steps, and with membership of s^{-1}t in F^n when only the
/// endpoints are pinned.
struct WalkCheck {
    bool rewrite_zero = false;
    bool walk_exists = false;  // F-step walk through the given letters
    bool endpoint_in_Fn = false;
    bool consistent = false;   // rewrite_zero == !walk_exists
};

WalkCheck word_walk_check(const GroupOracle& g, const GammaSubset& f,
                          const std::vector<GroupElem>& word);

/// Group elements whose matrix slot has operator norm above eps.
std::vector<GroupElem> graded_support(const std::map<GroupElem, Eigen::MatrixXcd>& family,
                                      double eps = 1e-10);

}  // namespace nckit

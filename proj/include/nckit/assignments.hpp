#pragma once

#include "nckit/presentation.hpp"

namespace nckit {

GeneratorAssignment identity_assignment(const PresentationPtr& p);

/// Evaluation homomorphism C_Sigma -> C_Sigma0 for a subcomplex: keeps the
/// generators of the subcomplex, kills the rest.
GeneratorAssignment evaluation_hom(const SimplicialComplex& sigma, const SimplicialComplex& sigma0,
                                   Variant variant = Variant::Full);

/// Induced homomorphism C_{target of m} -> C_{source of m} of a proper
/// simplicial map: h_s maps to the sum over its preimage.
GeneratorAssignment induced_hom(const SimplicialMapDesc& m, Variant variant = Variant::Full);

/// Character killing every generator except h_s, which maps to 1.
GeneratorAssignment character_at_vertex(const PresentationPtr& p, const VertexId& s);

/// Composition of assignments (apply `inner` to the images of `outer`).
GeneratorAssignment compose(const GeneratorAssignment& outer, const GeneratorAssignment& inner);

// --- simplex algebra maps ---------------------------------------------------

/// Unital homomorphism C_Delta -> C_Sigma splitting the evaluation:
/// h'_i maps to h_{s_i} + (1 - sum of the h_{s_j}) / (n+1).
GeneratorAssignment simplex_cp_lift_hom(const SimplicialComplex& sigma, const Simplex& delta);

/// Family t |-> (h_i |-> t h_i + (1-t)/(n+1)) on a simplex algebra,
/// connecting the identity (t=1) with the barycentric character (t=0).
HomotopyFamily contraction_homotopy(const Simplex& delta);

/// Family h_s |-> (1-t) h_s for s != t_i, h_{t_i} |-> t, from the face
/// evaluation (t=0) to the unit character (t=1).
HomotopyFamily face_shrink_family(const Simplex& delta, const VertexId& t_i);

// --- sphere algebra maps ----------------------------------------------------

PresentationPtr sphere_presentation(int n);  // S_n^nc (Flag variant)

GeneratorAssignment kappa(int n, int i);
GeneratorAssignment alpha1_hom(int n);
GeneratorAssignment beta0_hom(int n);
GeneratorAssignment beta1_hom(int n);

struct SphereHomotopies {
    HomotopyFamily alpha1_to_kappa0;  // part (b)
    HomotopyFamily beta0_to_kappa0;   // part (c)
    HomotopyFamily beta1_to_kappa1;   // part (c)
};

/// Scalar homotopies of the sphere algebra; the rotation homotopy between
/// the 2x2 block maps is matrix-valued and lives in the numerics layer.
SphereHomotopies sphere_homotopies(int n);

}  // namespace nckit

#pragma once

#include "acb3/classes.hpp"
#include "acb3/structure_constants.hpp"
#include "acb3/tensors.hpp"

namespace acb3 {

// Each special-structure predicate is decided along two independent routes:
//   direct    — the defining identity instantiated on basis vectors,
//   by_class  — a characterization in terms of class membership plus scalar
//               relations between the decomposition parameters.
// The two routes must agree for every Lie algebra; verify checks this.
struct RouteFlags {
    bool direct = false;
    bool by_class = false;
    bool agree() const { return direct == by_class; }
};

struct SpecialStructureFlags {
    RouteFlags g_killing{};        // metric g is bi-invariant
    RouteFlags gtilde_killing{};   // associated metric g~ is bi-invariant
    RouteFlags phi_bi_invariant{}; // [x, phi y] = phi [x, y] on distinct basis pairs
    RouteFlags phi_abelian{};      // [phi x, phi y] = [x, y]
    RouteFlags xi_killing{};       // xi is a Killing vector field of g
};

// Evaluates all five predicates along both routes.
//
// Class-route characterizations (membership within, plus relations):
//   g_killing        {F8, F10}       and 2*lam == -nu
//   gtilde_killing   {F8, F9, F10}   and 2*lam == mu == nu
//   phi_bi_invariant {F8, F10}       and 2*lam == nu
//   phi_abelian      {F1, F8, F10}   and 2*lam == nu
//   xi_killing       {F1, F8, F10}   (no scalar relation)
SpecialStructureFlags special_structures(const StructureConstants& c,
                                         const Tolerance& tol);

// Defect matrix of the Killing condition for xi:
//   kcontact_defect[i][j] = -(Gamma^0_ij + Gamma^0_ji)
// Zero exactly when xi is a Killing vector field.
Mat3 kcontact_defect(const StructureConstants& c);

}  // namespace acb3

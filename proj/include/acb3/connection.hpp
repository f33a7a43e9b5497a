#pragma once

#include "acb3/structure_constants.hpp"

namespace acb3 {

// gamma[i][j][k]: coefficient of E_k in nabla_{E_i} E_j.
struct Connection {
    Ten3 gamma{};
};

// Levi-Civita connection of the left-invariant metric, via the Koszul
// identity 2 g(nabla_{E_i} E_j, E_k) = g([E_i,E_j],E_k) - g([E_j,E_k],E_i)
//                                    + g([E_k,E_i],E_j).
// Throws NotALieAlgebra when the constants fail the Jacobi identity.
Connection levi_civita(const StructureConstants& c);

// Max violation of nabla_{E_i} E_j - nabla_{E_j} E_i = [E_i, E_j].
Rational torsion_defect(const Connection& conn, const StructureConstants& c);

// Max violation of g(nabla_i E_j, E_k) + g(E_j, nabla_i E_k) = 0.
Rational metric_compat_defect(const Connection& conn);

}  // namespace acb3

#pragma once

#include "acb3/structure_constants.hpp"

namespace acb3 {

// f[i][j][k] = F(E_i, E_j, E_k) where F(x,y,z) = g((nabla_x phi) y, z).
using FTensor = Ten3;

struct LeeForms {
    Vec3 theta{};
    Vec3 theta_star{};
    Vec3 omega{};  // omega_0 = 0 always
};

// Closed-form F from the structure constants. The component pattern (up to
// the symmetry F_ijk = F_ikj) is:
//   F_111 = F_122 =  2 C^1_12        F_211 = F_222 = -2 C^2_12
//   F_120 = F_102 = -C^1_01          F_210 = F_201 = -C^2_02
//   F_020 = F_002 = -C^0_01          F_010 = F_001 =  C^0_02
//   F_110 = F_101 = (C^0_12 - C^2_01 + C^1_02)/2
//   F_220 = F_202 = (C^0_12 + C^2_01 - C^1_02)/2
//   F_011 = F_022 =  C^0_12 + C^2_01 + C^1_02
// and every other entry is zero. (The F_211 sign is forced by the defining
// formula; see the equivalence property with compute_F_oracle.)
FTensor compute_F_closed_form(const StructureConstants& c);

// Independent route: build nabla by the Koszul identity, form
// (nabla_i phi) E_j = nabla_i (phi E_j) - phi (nabla_i E_j), contract with g.
// Equals compute_F_closed_form entrywise for every Lie algebra.
FTensor compute_F_oracle(const StructureConstants& c);

// theta_0 = F_110 - F_220   theta_1 = F_111 - F_221   theta_2 = F_112 - F_211
// theta*_0 = F_120 + F_210  theta*_1 = F_112 + F_211  theta*_2 = F_111 + F_221
// omega_0 = 0               omega_1 = F_001            omega_2 = F_002
LeeForms lee_forms(const FTensor& f);

// Lee forms straight from the constants (cross-check route):
//   theta  = (-C^2_01 + C^1_02,  2 C^1_12,  2 C^2_12)
//   theta* = (-C^1_01 - C^2_02, -2 C^2_12,  2 C^1_12)
//   omega  = (0, C^0_02, -C^0_01)
LeeForms lee_forms_from_constants(const StructureConstants& c);

// Max-magnitude violation of each defining identity of an F tensor.
struct FSymmetryDefects {
    Rational pair_symmetry;       // F_ijk = F_ikj
    Rational phi_compatibility;   // F(x,y,z) = F(x,phi y,phi z) + eta(y) F(x,xi,z) + eta(z) F(x,y,xi)
};

FSymmetryDefects check_F_symmetries(const FTensor& f);

}  // namespace acb3

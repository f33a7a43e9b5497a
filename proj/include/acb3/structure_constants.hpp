#pragma once

#include "acb3/rational.hpp"
#include "acb3/tensors.hpp"

namespace acb3 {

// [E_i, E_j] = C^k_ij E_k, stored as c[k][i][j] with antisymmetry in (i,j)
// maintained by the setter.
struct StructureConstants {
    Ten3 c{};

    void set(int k, int i, int j, const Rational& v);
    const Rational& get(int k, int i, int j) const { return c[k][i][j]; }
};

bool operator==(const StructureConstants& a, const StructureConstants& b);

// One defect vector per cyclic triple of (0,1,2): the components of
// [[E_i,E_j],E_k] + [[E_j,E_k],E_i] + [[E_k,E_i],E_j]. All-zero exactly when
// the constants define a Lie algebra.
using JacobiDefect = std::array<Vec3, 3>;

JacobiDefect jacobi_defect(const StructureConstants& c);
bool is_lie_algebra(const StructureConstants& c);

// Solves the Jacobi identity for the three dependent coefficients
//   C^0_12 = (C^1_12 C^0_01 + C^2_12 C^0_02) / (C^1_01 + C^2_02)
//   C^1_02 = (C^1_01 C^0_02 - C^1_12 C^2_02) / (C^0_01 - C^2_12)
//   C^2_01 = (C^0_01 C^2_02 + C^1_01 C^2_12) / (C^0_02 + C^1_12)
// given the six free ones; throws ZeroDenominator when inapplicable.
StructureConstants jacobi_close(const Rational& c112, const Rational& c212,
                                const Rational& c101, const Rational& c202,
                                const Rational& c001, const Rational& c002);

}  // namespace acb3

#pragma once

#include <set>
#include <string>
#include <vector>

#include "acb3/classes.hpp"
#include "acb3/connection.hpp"
#include "acb3/structure_constants.hpp"
#include "acb3/tensors.hpp"

namespace acb3 {

// Curvature tensor of a left-invariant connection, with the convention
//   R(x, y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z
// stored fully covariantly:
//   r[i][j][k][l] = g( R(E_i, E_j) E_k, E_l ).
Ten4 curvature_tensor(const Connection& conn, const StructureConstants& c);

struct RicciScalars {
    Mat3 rho{};       // rho_jk   = g^{il} R_ijkl  (signature-aware trace)
    Mat3 rho_star{};  // rho*_jk  = g^{il} R(E_i, E_j, E_k, phi E_l) = R_1jk2 + R_2jk1
    Rational tau{};   // tau  = g^{jk} rho_jk
    Rational tau_star{};  // tau* = g^{jk} rho(E_j, phi E_k) = 2 rho_12
};

RicciScalars ricci_and_scalars(const Ten4& r);

// Sectional curvatures of the three coordinate planes,
//   k_ij = R_ijij / ( g_ii g_jj - g_ij^2 )  up to the sign convention
//   k_ij = -2 R_ijij / (g /\ g)_ijij, which on this basis reduces to
//   k01 = -R_0101,  k02 = R_0202,  k12 = R_1212.
struct SectionalCurvatures {
    Rational k01{};
    Rational k02{};
    Rational k12{};
};

SectionalCurvatures sectional_curvatures(const Ten4& r);

// In dimension 3 the curvature tensor is determined by its Ricci tensor:
//   R = -g /\ ( rho - (tau/4) g ).
// Returns the max-abs entry of the difference; zero for every Lie algebra.
Rational check_r3_identity(const Ten4& r, const Mat3& rho, const Rational& tau);

// max |R(x, y, phi z, phi w) + R(x, y, z, w)| over basis tuples; measures how
// far the curvature is from being Kaehler-like with respect to phi.
Rational kaehler_defect(const Ten4& r);

// max |R(x, y, phi z, phi w)| over basis tuples; the phi-killed part of R.
Rational phi_killed_curvature_defect(const Ten4& r);

// Einstein-type conditions: solve rho = lam*g + mu*g~ + nu*(eta(x)eta).
// The system is solvable iff rho_01 = rho_02 = 0 and rho_11 = -rho_22;
// then lam = rho_11, mu = -rho_12, nu = rho_00 - lam - mu.
enum class EinsteinLabel {
    Einstein,         // mu = nu = 0
    EtaEinstein,      // mu = 0
    PhiEinstein,      // mu = 0 and rho(xi,xi) = 0
    HEinstein,        // rho(xi,xi) = 0
    VEinstein,        // lam = mu = 0
    StarEinstein,     // lam = mu' = 0 in the contact parametrization
    EtaComplexEinstein,  // solvable in the eta-complex parametrization
    ContactEinstein,     // solvable in the contact parametrization
    None,             // rho does not fit the three-term ansatz
};

std::string einstein_label_name(EinsteinLabel label);

struct EinsteinVerdict {
    bool solvable = false;
    Rational lambda_e{};
    Rational mu_e{};
    Rational nu_e{};
    std::set<EinsteinLabel> labels{};  // every label the metric satisfies
};

EinsteinVerdict einstein_taxonomy(const Mat3& rho, const Rational& tau,
                                  const Rational& tau_star, const Tolerance& tol);

struct CurvatureReport {
    Ten4 r{};
    Mat3 rho{};
    Mat3 rho_star{};
    Rational tau{};
    Rational tau_star{};
    Rational k01{};
    Rational k02{};
    Rational k12{};
    Rational kaehler{};
    Rational r3_defect{};
    EinsteinVerdict einstein{};
};

CurvatureReport curvature_report(const StructureConstants& c, const Tolerance& tol);

// Closed-form curvature of an algebra lying in a single basic class, as a
// Kulkarni-Nomizu combination of g, g* and eta(x)eta driven by tau (and, for
// F11, the full Ricci tensor).  Throws UnsupportedClass for mixed membership.
Ten4 curvature_template(ClassId id, const Rational& tau, const Mat3& rho);

// Ricci tensor predicted by the same per-class closed forms.
Mat3 ricci_template(ClassId id, const Rational& tau, const Rational& tau_star,
                    const Mat3& rho);

struct TemplateCheck {
    ClassId class_id = ClassId::F0;
    Rational r_defect{};    // max |R - template|
    Rational rho_defect{};  // max |rho - template|
};

// Compares the actual curvature of a single-class algebra against the
// closed-form template for that class.
TemplateCheck curvature_template_check(const ClassDecomposition& decomp,
                                       const CurvatureReport& report);

}  // namespace acb3

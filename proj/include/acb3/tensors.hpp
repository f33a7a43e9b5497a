#pragma once

#include <array>

#include "acb3/rational.hpp"

namespace acb3 {

using Vec3 = std::array<Rational, 3>;
using Mat3 = std::array<Vec3, 3>;
using Ten3 = std::array<Mat3, 3>;
using Ten4 = std::array<Ten3, 3>;

// phi[k][m]: coefficient of E_k in phi(E_m). phi(E_0)=0, phi(E_1)=E_2,
// phi(E_2)=-E_1; integer-valued so it can scale any Rational expression.
inline constexpr std::array<std::array<int, 3>, 3> kPhi{{
    {{0, 0, 0}},
    {{0, 0, -1}},
    {{0, 1, 0}},
}};

// g = diag(1,1,-1) on the basis {E_0 = xi, E_1, E_2}.
inline constexpr std::array<int, 3> kMetricDiag{1, 1, -1};

Mat3 zero_mat3();
Ten3 zero_ten3();
Ten4 zero_ten4();

Mat3 metric();             // g
Mat3 eta_outer();          // eta (x) eta
Mat3 associated_metric();  // g~ (x,y) = g(x, phi y) + eta(x) eta(y)
Mat3 phi_metric();         // g* = g(., phi .) = g~ - eta (x) eta

Rational max_abs(const Mat3& m);
Rational max_abs(const Ten3& t);
Rational max_abs(const Ten4& t);

Mat3 add(const Mat3& a, const Mat3& b);
Mat3 sub(const Mat3& a, const Mat3& b);
Mat3 scale(const Rational& s, const Mat3& m);
Ten3 add(const Ten3& a, const Ten3& b);
Ten3 sub(const Ten3& a, const Ten3& b);
Ten4 add(const Ten4& a, const Ten4& b);
Ten4 sub(const Ten4& a, const Ten4& b);
Ten4 scale(const Rational& s, const Ten4& t);

// The fixed almost contact structure with B-metric on the basis; exposed so
// its defining identities can be checked rather than assumed.
struct AcbStructure {
    Mat3 phi;    // phi[k][m] as Rational
    int xi = 0;  // xi = E_0
    Vec3 eta;    // (1, 0, 0)
    Mat3 g;      // diag(1, 1, -1)
};

AcbStructure standard_structure();

// Max violation over all basis tuples of: phi^2 = -Id + eta (x) xi,
// eta(xi) = 1, eta(phi x) = 0, and g(phi x, phi y) = -g(x,y) + eta(x)eta(y).
Rational structure_defect(const AcbStructure& s);

// (g1 KN h)_xyzw = g1_xz h_yw - g1_yz h_xw + g1_yw h_xz - g1_xw h_yz.
Ten4 kulkarni_nomizu(const Mat3& g1, const Mat3& h);

// Horizontal/vertical split of a symmetric 2-tensor: with h(x) = -phi^2 x and
// v(x) = eta(x) xi, l1(s) = s(h., h.), l2(s) = s(v., v.), l3 = rest; the three
// parts sum back to s and each projector is idempotent.
struct EllProjection {
    Mat3 l1, l2, l3;
};

EllProjection ell_projectors(const Mat3& s);

}  // namespace acb3

#include "acb3/fundamental.hpp"

namespace acb3 {

namespace {

// Koszul formula evaluated directly; unlike levi_civita it does not require
// the Jacobi identity, so the oracle route stays a pure formula-vs-formula
// comparison on arbitrary antisymmetric constants.
Ten3 koszul_raw(const StructureConstants& c) {
    Ten3 gamma{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Rational rhs = c.get(k, i, j) * kMetricDiag[k] +
                               c.get(j, k, i) * kMetricDiag[j] +
                               c.get(i, k, j) * kMetricDiag[i];
                gamma[i][j][k] = rhs / (2 * kMetricDiag[k]);
            }
    return gamma;
}

}  // namespace

FTensor compute_F_closed_form(const StructureConstants& sc) {
    const Ten3& c = sc.c;
    FTensor f{};
    f[1][1][1] = f[1][2][2] = 2 * c[1][1][2];
    f[2][1][1] = f[2][2][2] = -2 * c[2][1][2];
    f[1][2][0] = f[1][0][2] = -c[1][0][1];
    f[0][2][0] = f[0][0][2] = -c[0][0][1];
    f[2][1][0] = f[2][0][1] = -c[2][0][2];
    f[0][1][0] = f[0][0][1] = c[0][0][2];
    f[1][1][0] = f[1][0][1] = (c[0][1][2] - c[2][0][1] + c[1][0][2]) / 2;
    f[2][2][0] = f[2][0][2] = (c[0][1][2] + c[2][0][1] - c[1][0][2]) / 2;
    f[0][1][1] = f[0][2][2] = c[0][1][2] + c[2][0][1] + c[1][0][2];
    return f;
}

FTensor compute_F_oracle(const StructureConstants& c) {
    Ten3 gamma = koszul_raw(c);
    FTensor f{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // (nabla_i phi) E_j = nabla_i (phi E_j) - phi (nabla_i E_j)
            Vec3 comp{};
            for (int m = 0; m < 3; ++m) {
                if (kPhi[m][j] != 0)
                    for (int l = 0; l < 3; ++l) comp[l] += kPhi[m][j] * gamma[i][m][l];
                if (gamma[i][j][m] != 0)
                    for (int l = 0; l < 3; ++l) comp[l] -= gamma[i][j][m] * kPhi[l][m];
            }
            for (int k = 0; k < 3; ++k) f[i][j][k] = comp[k] * kMetricDiag[k];
        }
    return f;
}

LeeForms lee_forms(const FTensor& f) {
    LeeForms lee{};
    lee.theta = {f[1][1][0] - f[2][2][0], f[1][1][1] - f[2][2][1],
                 f[1][1][2] - f[2][1][1]};
    lee.theta_star = {f[1][2][0] + f[2][1][0], f[1][1][2] + f[2][1][1],
                      f[1][1][1] + f[2][2][1]};
    lee.omega = {Rational(0), f[0][0][1], f[0][0][2]};
    return lee;
}

LeeForms lee_forms_from_constants(const StructureConstants& sc) {
    const Ten3& c = sc.c;
    LeeForms lee{};
    lee.theta = {-c[2][0][1] + c[1][0][2], 2 * c[1][1][2], 2 * c[2][1][2]};
    lee.theta_star = {-c[1][0][1] - c[2][0][2], -2 * c[2][1][2], 2 * c[1][1][2]};
    lee.omega = {Rational(0), c[0][0][2], -c[0][0][1]};
    return lee;
}

FSymmetryDefects check_F_symmetries(const FTensor& f) {
    FSymmetryDefects d{Rational(0), Rational(0)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Rational pair = f[i][j][k] - f[i][k][j];
                if (abs(pair) > d.pair_symmetry) d.pair_symmetry = abs(pair);

                Rational phi_part{0};
                for (int m = 0; m < 3; ++m)
                    for (int n = 0; n < 3; ++n)
                        if (kPhi[m][j] != 0 && kPhi[n][k] != 0)
                            phi_part += kPhi[m][j] * kPhi[n][k] * f[i][m][n];
                if (j == 0) phi_part += f[i][0][k];
                if (k == 0) phi_part += f[i][j][0];
                Rational defect = f[i][j][k] - phi_part;
                if (abs(defect) > d.phi_compatibility) d.phi_compatibility = abs(defect);
            }
    return d;
}

}  // namespace acb3

#include "acb3/curvature.hpp"

#include "acb3/errors.hpp"

namespace acb3 {

Ten4 curvature_tensor(const Connection& conn, const StructureConstants& c) {
    const Ten3& g = conn.gamma;
    Ten4 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Vec3 comp{};
                for (int m = 0; m < 3; ++m) {
                    if (g[j][k][m] != 0)
                        for (int l = 0; l < 3; ++l) comp[l] += g[j][k][m] * g[i][m][l];
                    if (g[i][k][m] != 0)
                        for (int l = 0; l < 3; ++l) comp[l] -= g[i][k][m] * g[j][m][l];
                    const Rational& cm = c.get(m, i, j);
                    if (cm != 0)
                        for (int l = 0; l < 3; ++l) comp[l] -= cm * g[m][k][l];
                }
                for (int l = 0; l < 3; ++l) r[i][j][k][l] = comp[l] * kMetricDiag[l];
            }
    return r;
}

RicciScalars ricci_and_scalars(const Ten4& r) {
    RicciScalars s{};
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
            s.rho[j][k] = r[0][j][k][0] + r[1][j][k][1] - r[2][j][k][2];
            s.rho_star[j][k] = r[1][j][k][2] + r[2][j][k][1];
        }
    s.tau = s.rho[0][0] + s.rho[1][1] - s.rho[2][2];
    s.tau_star = 2 * s.rho[1][2];
    return s;
}

SectionalCurvatures sectional_curvatures(const Ten4& r) {
    const Ten4 kn = kulkarni_nomizu(metric(), metric());
    SectionalCurvatures k{};
    k.k01 = -2 * r[0][1][0][1] / kn[0][1][0][1];
    k.k02 = -2 * r[0][2][0][2] / kn[0][2][0][2];
    k.k12 = -2 * r[1][2][1][2] / kn[1][2][1][2];
    return k;
}

Rational check_r3_identity(const Ten4& r, const Mat3& rho, const Rational& tau) {
    const Mat3 h = sub(rho, scale(tau / 4, metric()));
    return max_abs(add(r, kulkarni_nomizu(metric(), h)));
}

Rational kaehler_defect(const Ten4& r) {
    Rational worst{0};
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                for (int w = 0; w < 3; ++w) {
                    Rational s = r[x][y][z][w];
                    for (int m = 0; m < 3; ++m)
                        for (int n = 0; n < 3; ++n)
                            if (kPhi[m][z] != 0 && kPhi[n][w] != 0)
                                s += kPhi[m][z] * kPhi[n][w] * r[x][y][m][n];
                    if (abs(s) > worst) worst = abs(s);
                }
    return worst;
}

Rational phi_killed_curvature_defect(const Ten4& r) {
    Rational worst{0};
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                for (int w = 0; w < 3; ++w) {
                    Rational s{0};
                    for (int m = 0; m < 3; ++m)
                        for (int n = 0; n < 3; ++n)
                            if (kPhi[m][z] != 0 && kPhi[n][w] != 0)
                                s += kPhi[m][z] * kPhi[n][w] * r[x][y][m][n];
                    if (abs(s) > worst) worst = abs(s);
                }
    return worst;
}

std::string einstein_label_name(EinsteinLabel label) {
    switch (label) {
        case EinsteinLabel::Einstein: return "Einstein";
        case EinsteinLabel::EtaEinstein: return "eta-Einstein";
        case EinsteinLabel::PhiEinstein: return "phi-Einstein";
        case EinsteinLabel::HEinstein: return "h-Einstein";
        case EinsteinLabel::VEinstein: return "v-Einstein";
        case EinsteinLabel::StarEinstein: return "*-Einstein";
        case EinsteinLabel::EtaComplexEinstein: return "eta-complex-Einstein";
        case EinsteinLabel::ContactEinstein: return "contact-Einstein";
        case EinsteinLabel::None: return "none";
    }
    return "?";
}

EinsteinVerdict einstein_taxonomy(const Mat3& rho, const Rational& tau,
                                  const Rational& tau_star, const Tolerance& tol) {
    EinsteinVerdict v{};
    v.solvable = tol.is_zero(rho[0][1]) && tol.is_zero(rho[0][2]) &&
                 tol.is_zero(rho[1][1] + rho[2][2]);
    if (!v.solvable) {
        v.labels.insert(EinsteinLabel::None);
        return v;
    }
    v.lambda_e = rho[1][1];
    v.mu_e = -rho[1][2];
    v.nu_e = rho[0][0] - v.lambda_e - v.mu_e;
    // Trace cross-checks of the caller-supplied scalars.
    if (!tol.is_zero(tau - (3 * v.lambda_e + v.mu_e + v.nu_e)))
        throw InvalidSpec("tau inconsistent with rho");
    if (!tol.is_zero(tau_star + 2 * v.mu_e))
        throw InvalidSpec("tau_star inconsistent with rho");

    v.labels.insert(EinsteinLabel::EtaComplexEinstein);
    v.labels.insert(EinsteinLabel::ContactEinstein);
    const bool mu0 = tol.is_zero(v.mu_e);
    const bool nu0 = tol.is_zero(v.nu_e);
    const bool lam0 = tol.is_zero(v.lambda_e);
    const bool vert0 = tol.is_zero(rho[0][0]);
    if (mu0) v.labels.insert(EinsteinLabel::EtaEinstein);
    if (mu0 && nu0) v.labels.insert(EinsteinLabel::Einstein);
    if (vert0) v.labels.insert(EinsteinLabel::HEinstein);
    if (lam0 && mu0) v.labels.insert(EinsteinLabel::VEinstein);
    if (vert0 && mu0) v.labels.insert(EinsteinLabel::PhiEinstein);
    if (vert0 && lam0) v.labels.insert(EinsteinLabel::StarEinstein);
    return v;
}

CurvatureReport curvature_report(const StructureConstants& c, const Tolerance& tol) {
    CurvatureReport rep{};
    const Connection conn = levi_civita(c);
    rep.r = curvature_tensor(conn, c);
    RicciScalars s = ricci_and_scalars(rep.r);
    rep.rho = s.rho;
    rep.rho_star = s.rho_star;
    rep.tau = s.tau;
    rep.tau_star = s.tau_star;
    SectionalCurvatures k = sectional_curvatures(rep.r);
    rep.k01 = k.k01;
    rep.k02 = k.k02;
    rep.k12 = k.k12;
    rep.kaehler = kaehler_defect(rep.r);
    rep.r3_defect = check_r3_identity(rep.r, rep.rho, rep.tau);
    rep.einstein = einstein_taxonomy(rep.rho, rep.tau, rep.tau_star, tol);
    return rep;
}

Ten4 curvature_template(ClassId id, const Rational& tau, const Mat3& rho) {
    const Mat3 g = metric();
    const Mat3 gs = phi_metric();
    const Mat3 ee = eta_outer();
    switch (id) {
        case ClassId::F0:
        case ClassId::F10:
            return zero_ten4();
        case ClassId::F1:
            return add(scale(-tau / 4, kulkarni_nomizu(g, g)),
                       scale(tau / 2, kulkarni_nomizu(g, ee)));
        case ClassId::F5:
            return add(scale(-tau / 12, kulkarni_nomizu(gs, gs)),
                       scale(-tau / 6, kulkarni_nomizu(g, ee)));
        case ClassId::F4:
        case ClassId::F8:
        case ClassId::F9:
            return add(scale(tau / 4, kulkarni_nomizu(gs, gs)),
                       scale(-tau / 2, kulkarni_nomizu(g, ee)));
        case ClassId::F11:
            return scale(Rational(-1), kulkarni_nomizu(rho, ee));
    }
    return zero_ten4();
}

Mat3 ricci_template(ClassId id, const Rational& tau, const Rational& tau_star,
                    const Mat3& rho) {
    const Mat3 g = metric();
    const Mat3 ee = eta_outer();
    switch (id) {
        case ClassId::F0:
        case ClassId::F10:
            return zero_mat3();
        case ClassId::F1:
            return scale(tau / 2, sub(g, ee));
        case ClassId::F5:
            return scale(tau / 3, g);
        case ClassId::F4:
        case ClassId::F8:
        case ClassId::F9:
            return scale(tau, ee);
        case ClassId::F11: {
            // rho = rho(phi., phi.) + (tau/2) g - tau* g*
            Mat3 out{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    Rational s{0};
                    for (int m = 0; m < 3; ++m)
                        for (int n = 0; n < 3; ++n)
                            if (kPhi[m][i] != 0 && kPhi[n][j] != 0)
                                s += kPhi[m][i] * kPhi[n][j] * rho[m][n];
                    out[i][j] = s + tau / 2 * g[i][j] - tau_star * phi_metric()[i][j];
                }
            return out;
        }
    }
    return zero_mat3();
}

TemplateCheck curvature_template_check(const ClassDecomposition& decomp,
                                       const CurvatureReport& report) {
    if (decomp.membership.size() != 1)
        throw UnsupportedClass("curvature template requires a single basic class");
    TemplateCheck check{};
    check.class_id = *decomp.membership.begin();
    check.r_defect = max_abs(
        sub(report.r, curvature_template(check.class_id, report.tau, report.rho)));
    check.rho_defect = max_abs(sub(
        report.rho,
        ricci_template(check.class_id, report.tau, report.tau_star, report.rho)));
    return check;
}

}  // namespace acb3

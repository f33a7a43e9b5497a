#include "acb3/special.hpp"

#include "acb3/connection.hpp"
#include "acb3/fundamental.hpp"

namespace acb3 {

namespace {

bool subset_of(const std::set<ClassId>& membership, const std::set<ClassId>& allowed) {
    for (ClassId id : membership)
        if (id != ClassId::F0 && !allowed.count(id)) return false;
    return true;
}

}  // namespace

SpecialStructureFlags special_structures(const StructureConstants& c,
                                         const Tolerance& tol) {
    SpecialStructureFlags out{};
    const Mat3 gt = associated_metric();
    const Connection conn = levi_civita(c);

    // Direct route: the defining identities on basis vectors.
    bool gk = true, gtk = true, bi = true, ab = true, xk = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (!tol.is_zero(conn.gamma[i][j][0] + conn.gamma[j][i][0])) xk = false;
            for (int k = 0; k < 3; ++k) {
                // g([x,y], z) = g(x, [y,z])
                if (!tol.is_zero(c.get(k, i, j) * kMetricDiag[k] -
                                 c.get(i, j, k) * kMetricDiag[i]))
                    gk = false;
                // g~([x,y], z) = g~(x, [y,z])
                Rational lhs{0}, rhs{0};
                for (int m = 0; m < 3; ++m) {
                    lhs += c.get(m, i, j) * gt[m][k];
                    rhs += c.get(m, j, k) * gt[i][m];
                }
                if (!tol.is_zero(lhs - rhs)) gtk = false;
                // phi [x,y] = [x, phi y] on pairs of distinct basis vectors;
                // extending it to x = y forces the algebra to be abelian and
                // no longer matches the class-route characterization.
                if (i != j) {
                    Rational a{0}, b{0};
                    for (int m = 0; m < 3; ++m) {
                        a += c.get(m, i, j) * kPhi[k][m];
                        b += kPhi[m][j] * c.get(k, i, m);
                    }
                    if (!tol.is_zero(a - b)) bi = false;
                }
                // [phi x, phi y] = [x, y]
                Rational twisted{0};
                for (int m = 0; m < 3; ++m)
                    for (int n = 0; n < 3; ++n)
                        if (kPhi[m][i] != 0 && kPhi[n][j] != 0)
                            twisted += kPhi[m][i] * kPhi[n][j] * c.get(k, m, n);
                if (!tol.is_zero(twisted - c.get(k, i, j))) ab = false;
            }
        }
    out.g_killing.direct = gk;
    out.gtilde_killing.direct = gtk;
    out.phi_bi_invariant.direct = bi;
    out.phi_abelian.direct = ab;
    out.xi_killing.direct = xk;

    // Class route: membership constraints plus scalar relations.
    ClassDecomposition d = classify(c, tol);
    const ClassParams& p = d.params;
    out.g_killing.by_class = subset_of(d.membership, {ClassId::F8, ClassId::F10}) &&
                             tol.is_zero(2 * p.lam + p.nu);
    out.gtilde_killing.by_class =
        subset_of(d.membership, {ClassId::F8, ClassId::F9, ClassId::F10}) &&
        tol.is_zero(2 * p.lam - p.mu) && tol.is_zero(p.mu - p.nu);
    out.phi_bi_invariant.by_class =
        subset_of(d.membership, {ClassId::F8, ClassId::F10}) &&
        tol.is_zero(2 * p.lam - p.nu);
    out.phi_abelian.by_class =
        subset_of(d.membership, {ClassId::F1, ClassId::F8, ClassId::F10}) &&
        tol.is_zero(2 * p.lam - p.nu);
    out.xi_killing.by_class =
        subset_of(d.membership, {ClassId::F1, ClassId::F8, ClassId::F10});
    return out;
}

Mat3 kcontact_defect(const StructureConstants& c) {
    const Connection conn = levi_civita(c);
    Mat3 d{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            d[i][j] = -(conn.gamma[i][j][0] + conn.gamma[j][i][0]);
    return d;
}

}  // namespace acb3

#include "acb3/tensors.hpp"

namespace acb3 {

Mat3 zero_mat3() { return Mat3{}; }
Ten3 zero_ten3() { return Ten3{}; }
Ten4 zero_ten4() { return Ten4{}; }

Mat3 metric() {
    Mat3 g{};
    for (int i = 0; i < 3; ++i) g[i][i] = kMetricDiag[i];
    return g;
}

Mat3 eta_outer() {
    Mat3 m{};
    m[0][0] = 1;
    return m;
}

Mat3 phi_metric() {
    // g*(E_i, E_j) = g(E_i, phi E_j)
    Mat3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = Rational(kMetricDiag[i] * kPhi[i][j]);
    return m;
}

Mat3 associated_metric() { return add(phi_metric(), eta_outer()); }

Rational max_abs(const Mat3& m) {
    Rational worst{0};
    for (const auto& row : m)
        for (const auto& v : row)
            if (abs(v) > worst) worst = abs(v);
    return worst;
}

Rational max_abs(const Ten3& t) {
    Rational worst{0};
    for (const auto& m : t)
        if (auto v = max_abs(m); v > worst) worst = v;
    return worst;
}

Rational max_abs(const Ten4& t) {
    Rational worst{0};
    for (const auto& m : t)
        if (auto v = max_abs(m); v > worst) worst = v;
    return worst;
}

Mat3 add(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = a[i][j] + b[i][j];
    return out;
}

Mat3 sub(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = a[i][j] - b[i][j];
    return out;
}

Mat3 scale(const Rational& s, const Mat3& m) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = s * m[i][j];
    return out;
}

Ten3 add(const Ten3& a, const Ten3& b) {
    Ten3 out{};
    for (int i = 0; i < 3; ++i) out[i] = add(a[i], b[i]);
    return out;
}

Ten3 sub(const Ten3& a, const Ten3& b) {
    Ten3 out{};
    for (int i = 0; i < 3; ++i) out[i] = sub(a[i], b[i]);
    return out;
}

Ten4 add(const Ten4& a, const Ten4& b) {
    Ten4 out{};
    for (int i = 0; i < 3; ++i) out[i] = add(a[i], b[i]);
    return out;
}

Ten4 sub(const Ten4& a, const Ten4& b) {
    Ten4 out{};
    for (int i = 0; i < 3; ++i) out[i] = sub(a[i], b[i]);
    return out;
}

Ten4 scale(const Rational& s, const Ten4& t) {
    Ten4 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out[i][j] = scale(s, t[i][j]);
    return out;
}

AcbStructure standard_structure() {
    AcbStructure s{};
    for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) s.phi[k][m] = Rational(kPhi[k][m]);
    s.xi = 0;
    s.eta = Vec3{Rational(1), Rational(0), Rational(0)};
    s.g = metric();
    return s;
}

Rational structure_defect(const AcbStructure& s) {
    Rational worst{0};
    auto track = [&worst](const Rational& v) {
        if (abs(v) > worst) worst = abs(v);
    };
    // phi^2 = -Id + eta (x) xi
    for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) {
            Rational acc{0};
            for (int k = 0; k < 3; ++k) acc += s.phi[l][k] * s.phi[k][m];
            Rational expected = (l == m ? Rational(-1) : Rational(0)) +
                                (l == s.xi ? s.eta[m] : Rational(0));
            track(acc - expected);
        }
    // eta(xi) = 1, eta(phi x) = 0
    track(s.eta[s.xi] - 1);
    for (int m = 0; m < 3; ++m) {
        Rational acc{0};
        for (int k = 0; k < 3; ++k) acc += s.eta[k] * s.phi[k][m];
        track(acc);
    }
    // g(phi x, phi y) = -g(x, y) + eta(x) eta(y)
    for (int m = 0; m < 3; ++m)
        for (int n = 0; n < 3; ++n) {
            Rational acc{0};
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) acc += s.phi[k][m] * s.phi[l][n] * s.g[k][l];
            track(acc + s.g[m][n] - s.eta[m] * s.eta[n]);
        }
    return worst;
}

Ten4 kulkarni_nomizu(const Mat3& g1, const Mat3& h) {
    Ten4 t{};
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                for (int w = 0; w < 3; ++w)
                    t[x][y][z][w] = g1[x][z] * h[y][w] - g1[y][z] * h[x][w] +
                                    g1[y][w] * h[x][z] - g1[x][w] * h[y][z];
    return t;
}

EllProjection ell_projectors(const Mat3& s) {
    EllProjection p{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const bool vi = i == 0, vj = j == 0;
            if (!vi && !vj)
                p.l1[i][j] = s[i][j];
            else if (vi && vj)
                p.l2[i][j] = s[i][j];
            else
                p.l3[i][j] = s[i][j];
        }
    return p;
}

}  // namespace acb3

#include "acb3/connection.hpp"

#include "acb3/errors.hpp"

namespace acb3 {

Connection levi_civita(const StructureConstants& c) {
    if (!is_lie_algebra(c)) throw NotALieAlgebra();
    Connection conn{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Rational rhs = c.get(k, i, j) * kMetricDiag[k] +
                               c.get(j, k, i) * kMetricDiag[j] +
                               c.get(i, k, j) * kMetricDiag[i];
                conn.gamma[i][j][k] = rhs / (2 * kMetricDiag[k]);
            }
    return conn;
}

Rational torsion_defect(const Connection& conn, const StructureConstants& c) {
    Rational worst{0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Rational d =
                    conn.gamma[i][j][k] - conn.gamma[j][i][k] - c.get(k, i, j);
                if (abs(d) > worst) worst = abs(d);
            }
    return worst;
}

Rational metric_compat_defect(const Connection& conn) {
    Rational worst{0};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                Rational d = conn.gamma[i][j][k] * kMetricDiag[k] +
                             conn.gamma[i][k][j] * kMetricDiag[j];
                if (abs(d) > worst) worst = abs(d);
            }
    return worst;
}

}  // namespace acb3

#include "acb3/structure_constants.hpp"

#include "acb3/errors.hpp"

namespace acb3 {

void StructureConstants::set(int k, int i, int j, const Rational& v) {
    if (i == j) {
        if (v != 0) throw InvalidSpec("[E_i, E_i] must vanish");
        return;
    }
    c[k][i][j] = v;
    c[k][j][i] = -v;
}

bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.c == b.c;
}

JacobiDefect jacobi_defect(const StructureConstants& c) {
    // double_bracket(i, j, k) = [[E_i, E_j], E_k]
    auto double_bracket = [&c](int i, int j, int k) {
        Vec3 out{};
        for (int m = 0; m < 3; ++m) {
            const Rational& cm = c.get(m, i, j);
            if (cm == 0) continue;
            for (int l = 0; l < 3; ++l) out[l] += cm * c.get(l, m, k);
        }
        return out;
    };
    JacobiDefect res{};
    constexpr int triples[3][3] = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
    for (int t = 0; t < 3; ++t) {
        const auto [i, j, k] = std::tuple{triples[t][0], triples[t][1], triples[t][2]};
        Vec3 a = double_bracket(i, j, k), b = double_bracket(j, k, i),
             d = double_bracket(k, i, j);
        for (int l = 0; l < 3; ++l) res[t][l] = a[l] + b[l] + d[l];
    }
    return res;
}

bool is_lie_algebra(const StructureConstants& c) {
    for (const Vec3& row : jacobi_defect(c))
        for (const Rational& v : row)
            if (v != 0) return false;
    return true;
}

StructureConstants jacobi_close(const Rational& c112, const Rational& c212,
                                const Rational& c101, const Rational& c202,
                                const Rational& c001, const Rational& c002) {
    const Rational d1 = c101 + c202;
    const Rational d2 = c001 - c212;
    const Rational d3 = c002 + c112;
    if (d1 == 0) throw ZeroDenominator(0);
    if (d2 == 0) throw ZeroDenominator(1);
    if (d3 == 0) throw ZeroDenominator(2);

    StructureConstants c;
    c.set(1, 1, 2, c112);
    c.set(2, 1, 2, c212);
    c.set(1, 0, 1, c101);
    c.set(2, 0, 2, c202);
    c.set(0, 0, 1, c001);
    c.set(0, 0, 2, c002);
    c.set(0, 1, 2, (c112 * c001 + c212 * c002) / d1);
    c.set(1, 0, 2, (c101 * c002 - c112 * c202) / d2);
    c.set(2, 0, 1, (c001 * c202 + c101 * c212) / d3);
    return c;
}

}  // namespace acb3

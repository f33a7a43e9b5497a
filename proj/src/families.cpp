#include "acb3/families.hpp"

#include <random>

#include "acb3/errors.hpp"

namespace acb3 {

namespace {

void require_single_parameter(const FamilySpec& spec) {
    if (spec.beta != 0)
        throw InvalidSpec("beta must be 0 for class " + class_name(spec.class_id));
}

// Applies the eight index symmetries of a curvature generator: antisymmetry
// in the first and last pairs plus symmetry under pair exchange.
void set_orbit(Ten4& t, int i, int j, int k, int l, const Rational& v) {
    t[i][j][k][l] = v;
    t[j][i][k][l] = -v;
    t[i][j][l][k] = -v;
    t[j][i][l][k] = v;
    t[k][l][i][j] = v;
    t[l][k][i][j] = -v;
    t[k][l][j][i] = -v;
    t[l][k][j][i] = v;
}

}  // namespace

StructureConstants construct_class_family(const FamilySpec& spec) {
    const Rational& a = spec.alpha;
    const Rational& b = spec.beta;
    StructureConstants c;
    switch (spec.class_id) {
        case ClassId::F0:
            throw InvalidSpec("no parametrized family for the zero class");
        case ClassId::F1:
            c.set(1, 1, 2, a);
            c.set(2, 1, 2, b);
            break;
        case ClassId::F4:
            require_single_parameter(spec);
            c.set(2, 0, 1, a);
            c.set(1, 0, 2, -a);
            break;
        case ClassId::F5:
            require_single_parameter(spec);
            c.set(1, 0, 1, a);
            c.set(2, 0, 2, a);
            break;
        case ClassId::F8:
            require_single_parameter(spec);
            c.set(2, 0, 1, a);
            c.set(1, 0, 2, a);
            c.set(0, 1, 2, -2 * a);
            break;
        case ClassId::F9:
            require_single_parameter(spec);
            c.set(1, 0, 1, a);
            c.set(2, 0, 2, -a);
            break;
        case ClassId::F10:
            require_single_parameter(spec);
            c.set(2, 0, 1, a);
            c.set(1, 0, 2, a);
            break;
        case ClassId::F11:
            c.set(0, 0, 1, a);
            c.set(0, 0, 2, b);
            break;
    }
    return c;
}

StructureConstants construct_example(const ExampleSpec& spec) {
    StructureConstants c;
    c.set(1, 0, 1, -spec.a1);
    c.set(2, 0, 1, -spec.a2);
    c.set(1, 0, 2, -spec.a2);
    c.set(2, 0, 2, spec.a1);
    return c;
}

StructureConstants random_lie_algebra(std::uint64_t seed, const Rational& bound) {
    if (bound <= 0) throw InvalidSpec("bound must be positive");
    const Integer floor_bound = numerator(bound) / denominator(bound);
    if (floor_bound > 1000000000000000000LL) throw InvalidSpec("bound too large");
    const auto B = floor_bound.convert_to<std::uint64_t>();

    std::mt19937_64 rng(seed);
    auto draw = [&rng, B]() {
        const auto num_raw = rng() % (2 * B + 1);
        const auto num = static_cast<std::int64_t>(num_raw) - static_cast<std::int64_t>(B);
        const std::uint64_t den_raw = rng();
        const std::uint64_t den = B == 0 ? 1 : den_raw % B + 1;
        return Rational(Integer(num), Integer(den));
    };

    for (int attempt = 0; attempt < 1000; ++attempt) {
        const Rational c112 = draw(), c212 = draw(), c101 = draw(), c202 = draw(),
                       c001 = draw(), c002 = draw();
        try {
            return jacobi_close(c112, c212, c101, c202, c001, c002);
        } catch (const ZeroDenominator&) {
            continue;
        }
    }
    throw ExhaustedRetries();
}

Connection expected_connection(const FamilySpec& spec) {
    const Rational& a = spec.alpha;
    const Rational& b = spec.beta;
    Connection conn{};
    auto& g = conn.gamma;
    switch (spec.class_id) {
        case ClassId::F0:
            throw InvalidSpec("no parametrized family for the zero class");
        case ClassId::F1:
            g[1][1][2] = a;
            g[1][2][1] = a;
            g[2][1][2] = -b;
            g[2][2][1] = -b;
            break;
        case ClassId::F4:
            g[1][0][2] = -a;
            g[2][0][1] = a;
            g[1][2][0] = -a;
            g[2][1][0] = -a;
            break;
        case ClassId::F5:
            g[1][1][0] = a;
            g[2][2][0] = -a;
            g[1][0][1] = -a;
            g[2][0][2] = -a;
            break;
        case ClassId::F8:
            g[1][2][0] = -a;
            g[2][1][0] = a;
            g[1][0][2] = -a;
            g[2][0][1] = -a;
            break;
        case ClassId::F9:
            g[1][1][0] = a;
            g[2][2][0] = a;
            g[1][0][1] = -a;
            g[2][0][2] = a;
            break;
        case ClassId::F10:
            g[0][1][2] = a;
            g[0][2][1] = a;
            break;
        case ClassId::F11:
            g[0][0][1] = -a;
            g[0][0][2] = b;
            g[0][1][0] = a;
            g[0][2][0] = b;
            break;
    }
    return conn;
}

ExpectedCurvature expected_curvature(const FamilySpec& spec) {
    const Rational& a = spec.alpha;
    const Rational& b = spec.beta;
    const Rational a2 = a * a, b2 = b * b;
    ExpectedCurvature e{};
    switch (spec.class_id) {
        case ClassId::F0:
            throw InvalidSpec("no parametrized family for the zero class");
        case ClassId::F1: {
            const Rational t = a2 - b2;
            set_orbit(e.r, 1, 2, 1, 2, t);
            e.rho[1][1] = t;
            e.rho[2][2] = -t;
            e.rho_star[1][2] = e.rho_star[2][1] = t;
            e.tau = 2 * t;
            e.k12 = t;
            break;
        }
        case ClassId::F4:
            set_orbit(e.r, 0, 1, 0, 1, -a2);
            set_orbit(e.r, 0, 2, 0, 2, a2);
            set_orbit(e.r, 1, 2, 1, 2, -a2);
            e.rho[0][0] = 2 * a2;
            e.rho_star[1][2] = e.rho_star[2][1] = -a2;
            e.tau = 2 * a2;
            e.k01 = a2;
            e.k02 = a2;
            e.k12 = -a2;
            break;
        case ClassId::F5:
            set_orbit(e.r, 0, 1, 0, 1, a2);
            set_orbit(e.r, 0, 2, 0, 2, -a2);
            set_orbit(e.r, 1, 2, 1, 2, -a2);
            e.rho[0][0] = -2 * a2;
            e.rho[1][1] = -2 * a2;
            e.rho[2][2] = 2 * a2;
            e.rho_star[1][2] = e.rho_star[2][1] = -a2;
            e.tau = -6 * a2;
            e.k01 = -a2;
            e.k02 = -a2;
            e.k12 = -a2;
            break;
        case ClassId::F8:
        case ClassId::F9:
            set_orbit(e.r, 0, 1, 0, 1, a2);
            set_orbit(e.r, 0, 2, 0, 2, -a2);
            set_orbit(e.r, 1, 2, 1, 2, a2);
            e.rho[0][0] = -2 * a2;
            e.rho_star[1][2] = e.rho_star[2][1] = a2;
            e.tau = -2 * a2;
            e.k01 = -a2;
            e.k02 = -a2;
            e.k12 = a2;
            break;
        case ClassId::F10:
            break;  // flat
        case ClassId::F11:
            set_orbit(e.r, 0, 1, 0, 1, a2);
            set_orbit(e.r, 0, 2, 0, 2, b2);
            set_orbit(e.r, 0, 1, 2, 0, -a * b);
            e.rho[0][0] = -a2 + b2;
            e.rho[1][1] = -a2;
            e.rho[2][2] = -b2;
            e.rho[1][2] = e.rho[2][1] = -a * b;
            e.rho_star[0][0] = -2 * a * b;
            e.tau = 2 * (b2 - a2);
            e.tau_star = -2 * a * b;
            e.k01 = -a2;
            e.k02 = b2;
            break;
    }
    return e;
}

}  // namespace acb3

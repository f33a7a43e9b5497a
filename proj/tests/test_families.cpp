#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "acb3/classes.hpp"
#include "acb3/connection.hpp"
#include "acb3/curvature.hpp"
#include "acb3/errors.hpp"
#include "acb3/families.hpp"
#include "acb3/structure_constants.hpp"
#include "doctest.h"

using namespace acb3;

namespace {
const Tolerance kExact = exact_tolerance();
}

TEST_CASE("family constructors place the advertised constants") {
    StructureConstants f1 =
        construct_class_family({ClassId::F1, Rational(3), Rational(5)});
    CHECK(f1.get(1, 1, 2) == 3);
    CHECK(f1.get(2, 1, 2) == 5);
    CHECK(f1.get(0, 1, 2) == 0);

    StructureConstants f4 =
        construct_class_family({ClassId::F4, Rational(3), Rational(0)});
    CHECK(f4.get(2, 0, 1) == 3);
    CHECK(f4.get(1, 0, 2) == -3);

    StructureConstants f5 =
        construct_class_family({ClassId::F5, Rational(3), Rational(0)});
    CHECK(f5.get(1, 0, 1) == 3);
    CHECK(f5.get(2, 0, 2) == 3);

    StructureConstants f8 =
        construct_class_family({ClassId::F8, Rational(3), Rational(0)});
    CHECK(f8.get(2, 0, 1) == 3);
    CHECK(f8.get(1, 0, 2) == 3);
    CHECK(f8.get(0, 1, 2) == -6);

    StructureConstants f9 =
        construct_class_family({ClassId::F9, Rational(3), Rational(0)});
    CHECK(f9.get(1, 0, 1) == 3);
    CHECK(f9.get(2, 0, 2) == -3);

    StructureConstants f10 =
        construct_class_family({ClassId::F10, Rational(3), Rational(0)});
    CHECK(f10.get(2, 0, 1) == 3);
    CHECK(f10.get(1, 0, 2) == 3);

    StructureConstants f11 =
        construct_class_family({ClassId::F11, Rational(3), Rational(5)});
    CHECK(f11.get(0, 0, 1) == 3);
    CHECK(f11.get(0, 0, 2) == 5);
}

TEST_CASE("every family member satisfies the Jacobi identity") {
    for (ClassId id : {ClassId::F1, ClassId::F4, ClassId::F5, ClassId::F8,
                       ClassId::F9, ClassId::F10, ClassId::F11}) {
        for (int a = -3; a <= 3; ++a) {
            FamilySpec spec{id, Rational(a, 2), Rational(0)};
            if (id == ClassId::F1 || id == ClassId::F11) spec.beta = Rational(a);
            CHECK(is_lie_algebra(construct_class_family(spec)));
        }
    }
}

TEST_CASE("family parameter recovery") {
    ClassParams p1 = classify(construct_class_family(
                                  {ClassId::F1, Rational(1), Rational(2)}),
                              kExact)
                         .params;
    CHECK(p1.theta1 == 2);  // 2 alpha
    CHECK(p1.theta2 == 4);  // 2 beta (with the corrected component sign)

    ClassParams p4 = classify(construct_class_family(
                                  {ClassId::F4, Rational(1), Rational(0)}),
                              kExact)
                         .params;
    CHECK(p4.theta0 == -2);  // theta_0 = -2 alpha

    ClassParams p5 = classify(construct_class_family(
                                  {ClassId::F5, Rational(1), Rational(0)}),
                              kExact)
                         .params;
    CHECK(p5.tstar0 == -2);

    ClassParams p8 = classify(construct_class_family(
                                  {ClassId::F8, Rational(1), Rational(0)}),
                              kExact)
                         .params;
    CHECK(p8.lam == -1);

    ClassParams p9 = classify(construct_class_family(
                                  {ClassId::F9, Rational(1), Rational(0)}),
                              kExact)
                         .params;
    CHECK(p9.mu == -1);

    ClassParams p10 = classify(construct_class_family(
                                   {ClassId::F10, Rational(1), Rational(0)}),
                               kExact)
                          .params;
    CHECK(p10.nu == 2);

    ClassParams p11 = classify(construct_class_family(
                                   {ClassId::F11, Rational(1), Rational(2)}),
                               kExact)
                          .params;
    CHECK(p11.omega1 == 2);   // beta
    CHECK(p11.omega2 == -1);  // -alpha
}

TEST_CASE("invalid family specs are rejected") {
    CHECK_THROWS_AS(
        construct_class_family({ClassId::F0, Rational(1), Rational(0)}),
        InvalidSpec);
    CHECK_THROWS_AS(
        construct_class_family({ClassId::F4, Rational(1), Rational(1)}),
        InvalidSpec);
    CHECK_THROWS_AS(
        construct_class_family({ClassId::F10, Rational(0), Rational(2)}),
        InvalidSpec);
}

TEST_CASE("worked example constants and degenerations") {
    StructureConstants c = construct_example({Rational(1), Rational(3)});
    CHECK(c.get(1, 0, 1) == -1);
    CHECK(c.get(2, 0, 1) == -3);
    CHECK(c.get(1, 0, 2) == -3);
    CHECK(c.get(2, 0, 2) == 1);
    CHECK(is_lie_algebra(c));

    CHECK(classify(construct_example({Rational(1), Rational(0)}), kExact)
              .membership == std::set<ClassId>{ClassId::F9});
    StructureConstants pure10 = construct_example({Rational(0), Rational(1)});
    CHECK(classify(pure10, kExact).membership == std::set<ClassId>{ClassId::F10});
    CHECK(max_abs(curvature_report(pure10, kExact).r) == 0);
    CHECK(classify(construct_example({Rational(0), Rational(0)}), kExact)
              .membership == std::set<ClassId>{ClassId::F0});
}

TEST_CASE("random algebras are deterministic Lie algebras") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        StructureConstants a = random_lie_algebra(seed, Rational(4));
        StructureConstants b = random_lie_algebra(seed, Rational(4));
        CHECK(a == b);
        CHECK(is_lie_algebra(a));
    }
    CHECK(!(random_lie_algebra(1, Rational(4)) ==
            random_lie_algebra(2, Rational(4))));
}

TEST_CASE("random generation edge cases") {
    // bound < 1: every draw is 0/1, the closure denominators always vanish.
    CHECK_THROWS_AS(random_lie_algebra(1, Rational(1, 2)), ExhaustedRetries);
    CHECK_THROWS_AS(random_lie_algebra(1, Rational(0)), InvalidSpec);
    CHECK_THROWS_AS(random_lie_algebra(1, Rational(-3)), InvalidSpec);
}

TEST_CASE("expected connection spot values") {
    Connection f5 = expected_connection({ClassId::F5, Rational(1), Rational(0)});
    CHECK(f5.gamma[1][1][0] == 1);
    CHECK(f5.gamma[2][2][0] == -1);
    CHECK(f5.gamma[1][0][1] == -1);
    CHECK(f5.gamma[2][0][2] == -1);

    Connection f10 = expected_connection({ClassId::F10, Rational(2), Rational(0)});
    CHECK(f10.gamma[0][1][2] == 2);
    CHECK(f10.gamma[0][2][1] == 2);
    CHECK(f10.gamma[1][0][2] == 0);
}

TEST_CASE("expected curvature spot values") {
    ExpectedCurvature f1 = expected_curvature({ClassId::F1, Rational(1), Rational(2)});
    CHECK(f1.r[1][2][1][2] == -3);  // alpha^2 - beta^2
    CHECK(f1.tau == -6);
    CHECK(f1.k12 == -3);
    CHECK(f1.k01 == 0);

    ExpectedCurvature f10 = expected_curvature({ClassId::F10, Rational(5), Rational(0)});
    CHECK(max_abs(f10.r) == 0);
    CHECK(f10.tau == 0);

    ExpectedCurvature f11 = expected_curvature({ClassId::F11, Rational(1), Rational(2)});
    CHECK(f11.r[0][1][0][1] == 1);
    CHECK(f11.r[0][2][0][2] == 4);
    CHECK(f11.rho[1][2] == -2);
    CHECK(f11.tau == 6);
    CHECK(f11.tau_star == -4);
    CHECK(f11.k01 == -1);
    CHECK(f11.k02 == 4);
    CHECK(f11.k12 == 0);

    // The expected tensor inherits all curvature symmetries from its
    // generator expansion.
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z)
                for (int w = 0; w < 3; ++w) {
                    CHECK(f11.r[x][y][z][w] == -f11.r[y][x][z][w]);
                    CHECK(f11.r[x][y][z][w] == -f11.r[x][y][w][z]);
                    CHECK(f11.r[x][y][z][w] == f11.r[z][w][x][y]);
                }
}

TEST_CASE("pipeline curvature equals the expected tables over a dense grid") {
    const Rational grid[] = {Rational(-2), Rational(-1), Rational(-1, 2),
                             Rational(0),  Rational(1, 2), Rational(1),
                             Rational(2)};
    for (ClassId id : {ClassId::F1, ClassId::F4, ClassId::F5, ClassId::F8,
                       ClassId::F9, ClassId::F10, ClassId::F11}) {
        const bool two = id == ClassId::F1 || id == ClassId::F11;
        for (const Rational& a : grid) {
            for (const Rational& b : grid) {
                FamilySpec spec{id, a, two ? b : Rational(0)};
                CurvatureReport got =
                    curvature_report(construct_class_family(spec), kExact);
                ExpectedCurvature want = expected_curvature(spec);
                CHECK(max_abs(sub(got.r, want.r)) == 0);
                CHECK(max_abs(sub(got.rho, want.rho)) == 0);
                CHECK(max_abs(sub(got.rho_star, want.rho_star)) == 0);
                CHECK(got.tau == want.tau);
                CHECK(got.tau_star == want.tau_star);
                CHECK(got.k01 == want.k01);
                CHECK(got.k02 == want.k02);
                CHECK(got.k12 == want.k12);
                if (!two) break;
            }
        }
    }
}

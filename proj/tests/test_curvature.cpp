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

CurvatureReport family_report(ClassId id, int a, int b = 0) {
    return curvature_report(
        construct_class_family({id, Rational(a), Rational(b)}), kExact);
}

}  // namespace

TEST_CASE("Levi-Civita connection matches the golden family tables") {
    for (ClassId id : {ClassId::F1, ClassId::F4, ClassId::F5, ClassId::F8,
                       ClassId::F9, ClassId::F10, ClassId::F11}) {
        for (int a = -2; a <= 2; ++a) {
            FamilySpec spec{id, Rational(a), Rational(0)};
            if (id == ClassId::F1 || id == ClassId::F11) spec.beta = Rational(1 - a);
            StructureConstants c = construct_class_family(spec);
            Connection conn = levi_civita(c);
            CHECK(conn.gamma == expected_connection(spec).gamma);
            CHECK(torsion_defect(conn, c) == 0);
            CHECK(metric_compat_defect(conn) == 0);
        }
    }
}

TEST_CASE("the F4 connection includes the horizontal-to-vertical terms") {
    FamilySpec spec{ClassId::F4, Rational(2), Rational(0)};
    Connection conn = levi_civita(construct_class_family(spec));
    CHECK(conn.gamma[1][0][2] == -2);
    CHECK(conn.gamma[2][0][1] == 2);
    // Forced by torsion-freeness together with metric compatibility:
    CHECK(conn.gamma[1][2][0] == -2);
    CHECK(conn.gamma[2][1][0] == -2);
}

TEST_CASE("connection throws on non-Lie constants") {
    StructureConstants bad;
    bad.set(0, 0, 1, Rational(1));
    bad.set(1, 1, 2, Rational(1));
    CHECK_THROWS_AS(levi_civita(bad), NotALieAlgebra);
}

TEST_CASE("F1 family curvature") {
    CurvatureReport r = family_report(ClassId::F1, 1, 2);  // t = a^2-b^2 = -3
    CHECK(r.r[1][2][1][2] == -3);
    CHECK(r.rho[1][1] == -3);
    CHECK(r.rho[2][2] == 3);
    CHECK(r.rho[0][0] == 0);
    CHECK(r.rho_star[1][2] == -3);
    CHECK(r.rho_star[2][1] == -3);
    CHECK(r.tau == -6);
    CHECK(r.tau_star == 0);
    CHECK(r.k01 == 0);
    CHECK(r.k02 == 0);
    CHECK(r.k12 == -3);
    CHECK(r.kaehler == 6);  // 2|a^2-b^2|
}

TEST_CASE("F4 family curvature from the completed connection") {
    CurvatureReport r = family_report(ClassId::F4, 1);
    CHECK(r.r[0][1][0][1] == -1);
    CHECK(r.r[0][2][0][2] == 1);
    CHECK(r.r[1][2][1][2] == -1);
    CHECK(r.rho[0][0] == 2);
    CHECK(r.rho[1][1] == 0);
    CHECK(r.rho[2][2] == 0);
    CHECK(r.rho_star[1][2] == -1);
    CHECK(r.rho_star[2][1] == -1);
    CHECK(r.tau == 2);
    CHECK(r.tau_star == 0);
    CHECK(r.k01 == 1);
    CHECK(r.k02 == 1);
    CHECK(r.k12 == -1);
    CHECK(phi_killed_curvature_defect(r.r) == 1);
    CHECK(r.kaehler == 2);
}

TEST_CASE("F5 family curvature") {
    CurvatureReport r = family_report(ClassId::F5, 1);
    CHECK(r.r[0][1][0][1] == 1);
    CHECK(r.r[0][2][0][2] == -1);
    CHECK(r.r[1][2][1][2] == -1);
    CHECK(r.rho[0][0] == -2);
    CHECK(r.rho[1][1] == -2);
    CHECK(r.rho[2][2] == 2);
    CHECK(r.tau == -6);
    CHECK(r.k01 == -1);
    CHECK(r.k02 == -1);
    CHECK(r.k12 == -1);
    CHECK(phi_killed_curvature_defect(r.r) == 1);
}

TEST_CASE("F8 and F9 share one curvature tensor") {
    CurvatureReport r8 = family_report(ClassId::F8, 2);
    CurvatureReport r9 = family_report(ClassId::F9, 2);
    CHECK(max_abs(sub(r8.r, r9.r)) == 0);
    CHECK(r8.tau == -8);
    CHECK(r8.k12 == 4);
    CHECK(r8.k01 == -4);
    CHECK(r8.k02 == -4);
    CHECK(r8.rho[0][0] == -8);
    CHECK(r8.rho[1][1] == 0);
    CHECK(r8.tau_star == 0);
}

TEST_CASE("F10 family is flat") {
    CurvatureReport r = family_report(ClassId::F10, 3);
    CHECK(max_abs(r.r) == 0);
    CHECK(r.tau == 0);
    CHECK(r.kaehler == 0);
}

TEST_CASE("F11 family curvature") {
    CurvatureReport r = family_report(ClassId::F11, 1, 2);
    CHECK(r.r[0][1][0][1] == 1);
    CHECK(r.r[0][2][0][2] == 4);
    CHECK(r.r[0][1][2][0] == -2);
    CHECK(r.rho[0][0] == 3);
    CHECK(r.rho[1][1] == -1);
    CHECK(r.rho[2][2] == -4);
    CHECK(r.rho[1][2] == -2);
    CHECK(r.rho_star[0][0] == -4);  // -2 alpha beta
    CHECK(r.rho_star[1][2] == 0);
    CHECK(r.tau == 6);
    CHECK(r.tau_star == -4);
    CHECK(r.k01 == -1);
    CHECK(r.k02 == 4);
    CHECK(r.k12 == 0);
    CHECK(phi_killed_curvature_defect(r.r) == 0);
}

TEST_CASE("worked-example curvature suite") {
    StructureConstants c = construct_example({Rational(1), Rational(3)});
    CurvatureReport r = curvature_report(c, kExact);  // mu = 1, nu = -6
    CHECK(r.rho[0][0] == -2);
    CHECK(r.rho[1][1] == 0);
    CHECK(r.rho[2][2] == 0);
    CHECK(r.rho[1][2] == -6);  // mu nu: a nonzero off-diagonal Ricci entry
    CHECK(r.rho[2][1] == -6);
    CHECK(r.rho_star[0][0] == -12);  // 2 mu nu
    CHECK(r.rho_star[1][2] == 1);    // mu^2
    CHECK(r.rho_star[2][1] == 1);
    CHECK(r.tau == -2);
    CHECK(r.tau_star == -12);  // -4 a1 a2
    CHECK(r.k01 == -1);
    CHECK(r.k02 == -1);
    CHECK(r.k12 == 1);
    CHECK(r.einstein.solvable);
    CHECK(r.einstein.lambda_e == 0);
    CHECK(r.einstein.mu_e == 6);
    CHECK(r.einstein.nu_e == -8);
    CHECK(r.einstein.labels.count(EinsteinLabel::EtaComplexEinstein) == 1);
    CHECK(r.einstein.labels.count(EinsteinLabel::ContactEinstein) == 1);
    CHECK(r.einstein.labels.count(EinsteinLabel::EtaEinstein) == 0);
}

TEST_CASE("dimension-3 identity: R is determined by rho and tau") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        StructureConstants c = random_lie_algebra(seed, Rational(4));
        CurvatureReport r = curvature_report(c, kExact);
        CHECK(r.r3_defect == 0);
    }
    CHECK(family_report(ClassId::F11, 1, 2).r3_defect == 0);
}

TEST_CASE("Einstein taxonomy per family") {
    CHECK(family_report(ClassId::F1, 1, 2)
              .einstein.labels.count(EinsteinLabel::PhiEinstein) == 1);
    CurvatureReport f4 = family_report(ClassId::F4, 2);
    CHECK(f4.einstein.labels.count(EinsteinLabel::EtaEinstein) == 1);
    CHECK(f4.einstein.labels.count(EinsteinLabel::VEinstein) == 1);
    CHECK(f4.einstein.labels.count(EinsteinLabel::Einstein) == 0);
    CurvatureReport f5 = family_report(ClassId::F5, 1);
    CHECK(f5.einstein.labels.count(EinsteinLabel::Einstein) == 1);
    CHECK(f5.einstein.solvable);
    CHECK(f5.einstein.lambda_e == -2);
    CHECK(f5.einstein.mu_e == 0);
    CHECK(f5.einstein.nu_e == 0);
    CHECK(family_report(ClassId::F8, 1)
              .einstein.labels.count(EinsteinLabel::VEinstein) == 1);
    CHECK(family_report(ClassId::F9, 1)
              .einstein.labels.count(EinsteinLabel::VEinstein) == 1);

    CurvatureReport f11 = family_report(ClassId::F11, 1, 2);
    CHECK(!f11.einstein.solvable);
    CHECK(f11.einstein.labels == std::set<EinsteinLabel>{EinsteinLabel::None});

    CurvatureReport flat = family_report(ClassId::F10, 2);
    CHECK(flat.einstein.solvable);
    CHECK(flat.einstein.labels.count(EinsteinLabel::Einstein) == 1);
    CHECK(flat.einstein.labels.count(EinsteinLabel::HEinstein) == 1);
    CHECK(flat.einstein.labels.count(EinsteinLabel::StarEinstein) == 1);
}

TEST_CASE("curvature templates reproduce R from tau (and rho for F11)") {
    for (ClassId id : {ClassId::F1, ClassId::F4, ClassId::F5, ClassId::F8,
                       ClassId::F9, ClassId::F10, ClassId::F11}) {
        FamilySpec spec{id, Rational(2),
                        (id == ClassId::F1 || id == ClassId::F11) ? Rational(3)
                                                                  : Rational(0)};
        StructureConstants c = construct_class_family(spec);
        ClassDecomposition d = classify(c, kExact);
        CurvatureReport rep = curvature_report(c, kExact);
        TemplateCheck tc = curvature_template_check(d, rep);
        CHECK(tc.class_id == id);
        CHECK(tc.r_defect == 0);
        CHECK(tc.rho_defect == 0);
    }

    // Spot value: the F4 template at tau = 2 has R_0101 = -1.
    Ten4 t = curvature_template(ClassId::F4, Rational(2), zero_mat3());
    CHECK(t[0][1][0][1] == -1);

    // Mixed membership has no single-class template.
    StructureConstants mixed = construct_example({Rational(1), Rational(3)});
    ClassDecomposition dm = classify(mixed, kExact);
    CurvatureReport rm = curvature_report(mixed, kExact);
    CHECK_THROWS_AS(curvature_template_check(dm, rm), UnsupportedClass);
}

TEST_CASE("single-class example templates also hold") {
    StructureConstants f9 = construct_example({Rational(1), Rational(0)});
    ClassDecomposition d = classify(f9, kExact);
    CurvatureReport rep = curvature_report(f9, kExact);
    TemplateCheck tc = curvature_template_check(d, rep);
    CHECK(tc.class_id == ClassId::F9);
    CHECK(tc.r_defect == 0);
    CHECK(tc.rho_defect == 0);

    StructureConstants flat = construct_example({Rational(0), Rational(1)});
    ClassDecomposition df = classify(flat, kExact);
    CurvatureReport rf = curvature_report(flat, kExact);
    TemplateCheck tf = curvature_template_check(df, rf);
    CHECK(tf.class_id == ClassId::F10);
    CHECK(tf.r_defect == 0);
    CHECK(max_abs(rf.r) == 0);
}

TEST_CASE("expected_curvature matches the pipeline on sample points") {
    for (ClassId id : {ClassId::F1, ClassId::F4, ClassId::F5, ClassId::F8,
                       ClassId::F9, ClassId::F10, ClassId::F11}) {
        for (int a : {-2, 1}) {
            FamilySpec spec{id, Rational(a),
                            (id == ClassId::F1 || id == ClassId::F11) ? Rational(2)
                                                                      : Rational(0)};
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
        }
    }
    ExpectedCurvature f11 = expected_curvature({ClassId::F11, Rational(1), Rational(2)});
    CHECK(f11.r[0][1][0][1] == 1);
    CHECK(f11.r[0][2][0][2] == 4);
    CHECK(f11.rho[1][2] == -2);
    CHECK(f11.tau == 6);
}

#pragma once

#include <cstdint>
#include <optional>

#include "acb3/classes.hpp"
#include "acb3/connection.hpp"
#include "acb3/structure_constants.hpp"
#include "acb3/tensors.hpp"

namespace acb3 {

// One-parameter (or, for F1 and F11, two-parameter) family of Lie algebras
// whose structure lies in exactly the named basic class.
//
//   F1 : [E1,E2] = alpha E1 + beta E2
//   F4 : [E0,E1] = alpha E2,        [E0,E2] = -alpha E1   (via C^2_01 =  alpha, C^1_02 = -alpha)
//   F5 : [E0,E1] = alpha E1,        [E0,E2] =  alpha E2
//   F8 : [E0,E1] = alpha E2,        [E0,E2] =  alpha E1,  [E1,E2] = -2 alpha E0
//   F9 : [E0,E1] = alpha E1,        [E0,E2] = -alpha E2
//   F10: [E0,E1] = alpha E2,        [E0,E2] =  alpha E1
//   F11: [E0,E1] = alpha E0,        [E0,E2] =  beta  E0
//
// (Entries above are written as C^k_0j; the stored constants follow the same
// sign conventions as StructureConstants.)
struct FamilySpec {
    ClassId class_id = ClassId::F1;
    Rational alpha{};
    Rational beta{};  // used by F1 and F11 only
};

// Builds the structure constants of the family member.  Throws InvalidSpec if
// beta != 0 for a single-parameter class, or class_id is F0.
StructureConstants construct_class_family(const FamilySpec& spec);

// Two-parameter solvable example:
//   [E0,E1] = -a1 E1 - a2 E2,   [E0,E2] = -a2 E1 + a1 E2.
// Its structure lies in F9 (+) F10 with mu = a1, nu = -2 a2.
struct ExampleSpec {
    Rational a1{};
    Rational a2{};
};

StructureConstants construct_example(const ExampleSpec& spec);

// Deterministic random Lie algebra: six rationals are drawn from a
// mt19937_64 stream seeded with `seed` (numerators uniform over
// [-B, B], denominators over [1, B] with B = floor(bound)) for
//   C^1_12, C^2_12, C^1_01, C^2_02, C^0_01, C^0_02
// in that order, and the remaining three constants are completed by the
// closure formulas of jacobi_close.  Draws hitting a zero denominator of the
// closure are discarded and redrawn; after 1000 attempts ExhaustedRetries is
// thrown.  Throws InvalidSpec if bound <= 0.
StructureConstants random_lie_algebra(std::uint64_t seed, const Rational& bound);

// Expected Levi-Civita connection of a single-class family member, recorded
// as an explicit table (golden values, independent of the Koszul solver).
Connection expected_connection(const FamilySpec& spec);

struct ExpectedCurvature {
    Ten4 r{};
    Mat3 rho{};
    Mat3 rho_star{};
    Rational tau{};
    Rational tau_star{};
    Rational k01{};
    Rational k02{};
    Rational k12{};
};

// Expected curvature data of a single-class family member, as closed-form
// polynomials in the family parameters (golden values).
ExpectedCurvature expected_curvature(const FamilySpec& spec);

}  // namespace acb3

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acb3/structure_constants.hpp"
#include "acb3/tensors.hpp"

namespace acb3 {

struct VerifyOptions {
    std::vector<Rational> grid = {Rational(-2), Rational(-1), Rational(-1, 2),
                                  Rational(1, 2), Rational(1), Rational(2)};
    std::uint64_t seeds = 100;      // number of random algebras
    bool corrupt_expected = false;  // self-test: flip one golden value
};

struct CheckOutcome {
    std::string name;
    bool pass = false;
    std::string detail;  // filled in on failure
};

// A place where an independent recomputation disagrees with a published
// closed form.  These are reported, not failed: the verification suite pins
// the recomputed values and surfaces the conflict.
struct Discrepancy {
    std::string id;
    std::string claim;    // the closed form as published
    std::string finding;  // what recomputation gives
};

struct VerifyResult {
    std::vector<CheckOutcome> checks{};
    std::vector<Discrepancy> documented{};
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Runs the full verification battery: family golden tables, the worked
// two-parameter example, closed-form-vs-oracle agreement for F over the grid
// and random algebras, decomposition completeness, the dimension-3 curvature
// identity, the per-class predicate suite, special-structure route agreement,
// curvature templates with the Einstein taxonomy, and input round-trips.
VerifyResult run_verify(const VerifyOptions& options);

// The pinned list of published-vs-recomputed conflicts surfaced by reports.
std::vector<Discrepancy> documented_discrepancies();

// Shared pool of Lie algebras used by property checks: the named families
// over the grid, the two-parameter example, a few fixed algebras, and
// `seeds` random ones.
std::vector<StructureConstants> test_population(const VerifyOptions& options);

}  // namespace acb3

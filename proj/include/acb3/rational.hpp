#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace acb3 {

// All tensor entries and parameters live in Q; arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

enum class Mode { Exact, Float };

// "p/q" (q > 0 after normalization), plain integers, and decimal literals
// with optional exponent ("0.25", "-1e-9") — all mapped to their exact value.
Rational parse_rational(const std::string& text);

// Canonical form: lowest terms, "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& v);

// Exact value of the binary64 input (every finite double is rational).
Rational rational_from_double(double v);

double rational_to_double(const Rational& v);

inline Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

// Predicate-level tolerance. Exact mode keeps eps = 0, so zero means literal
// zero; float mode applies eps only when *deciding* predicates (membership,
// solvability, defect status) — the arithmetic itself is always exact.
struct Tolerance {
    Rational eps{0};

    bool is_zero(const Rational& v) const { return eps == 0 ? v == 0 : abs(v) <= eps; }
    // Scale-aware threshold used for class membership: an entry counts as
    // present when |entry| > eps*(1 + scale), with scale = max |F| of the input.
    bool is_present(const Rational& v, const Rational& scale) const {
        return eps == 0 ? v != 0 : abs(v) > eps * (1 + scale);
    }
};

inline Tolerance exact_tolerance() { return Tolerance{}; }
inline Tolerance float_tolerance(const Rational& eps) { return Tolerance{eps}; }

}  // namespace acb3

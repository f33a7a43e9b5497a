#pragma once

#include <map>
#include <set>
#include <string>

#include "acb3/fundamental.hpp"
#include "acb3/structure_constants.hpp"

namespace acb3 {

// Basic classes of the decomposition of F in dimension 3.  Only the seven
// classes below (plus the trivial class F0) can occur; the remaining four
// components of the general decomposition vanish identically in dimension 3.
enum class ClassId {
    F0,   // F == 0
    F1,
    F4,
    F5,
    F8,
    F9,
    F10,
    F11,
};

std::string class_name(ClassId id);

// Scalar parameters that determine the decomposition of an admissible F.
//
//   theta1  = F_111           theta2  = -F_211
//   theta0  = F_110 - F_220   lam     = (F_110 + F_220) / 2
//   tstar0  = F_120 + F_210   mu      = (F_120 - F_210) / 2
//   nu      = F_011
//   omega1  = F_001           omega2  = F_002
struct ClassParams {
    Rational theta1{};
    Rational theta2{};
    Rational theta0{};
    Rational lam{};
    Rational tstar0{};
    Rational mu{};
    Rational nu{};
    Rational omega1{};
    Rational omega2{};
};

// Reads the defining scalars off an F tensor.  Throws MalformedF if the
// tensor violates the symmetries checked by check_F_symmetries.
ClassParams extract_params(const FTensor& f, const Tolerance& tol);

// The component of F lying in a single basic class, reconstructed from the
// scalar parameters.  Summing the seven components reproduces F exactly.
FTensor component_tensor(ClassId id, const ClassParams& params);

struct ClassDecomposition {
    ClassParams params{};
    std::map<ClassId, FTensor> components{};  // all seven non-trivial classes
    std::set<ClassId> membership{};           // classes with nonzero component
};

// Splits F into its basic-class components and records which are present.
// A component counts as present when some entry exceeds the tolerance scaled
// by the magnitude of F.  If every component vanishes the membership is {F0}.
ClassDecomposition decompose(const FTensor& f, const Tolerance& tol);

// Convenience: structure constants -> F (closed form) -> decomposition.
ClassDecomposition classify(const StructureConstants& c, const Tolerance& tol);

}  // namespace acb3

#pragma once

#include <stdexcept>
#include <string>

namespace acb3 {

// Base for all library errors so callers can catch the whole family at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A closure denominator vanished; `which` in {0,1,2} names the denominator
// (0: C^1_01+C^2_02, 1: C^0_01-C^2_12, 2: C^0_02+C^1_12).
struct ZeroDenominator : Error {
    int which;
    explicit ZeroDenominator(int w)
        : Error("closure denominator " + std::to_string(w) + " vanishes"), which(w) {}
};

struct NotALieAlgebra : Error {
    NotALieAlgebra() : Error("structure constants violate the Jacobi identity") {}
};

struct MalformedF : Error {
    explicit MalformedF(const std::string& msg) : Error("malformed F tensor: " + msg) {}
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& msg) : Error("invalid spec: " + msg) {}
};

struct UnsupportedClass : Error {
    explicit UnsupportedClass(const std::string& msg) : Error("unsupported class: " + msg) {}
};

struct ExhaustedRetries : Error {
    ExhaustedRetries() : Error("random generation exhausted its retry budget") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

}  // namespace acb3

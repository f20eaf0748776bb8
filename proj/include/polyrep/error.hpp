#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyrep {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands belong to different fields") {}
};

struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t byte_offset)
        : Error(what + " (at byte " + std::to_string(byte_offset) + ")"), offset(byte_offset) {}
};

struct UnknownVariable : Error {
    std::string name;
    UnknownVariable(const std::string& var, std::size_t byte_offset)
        : Error("unknown variable '" + var + "' (at byte " + std::to_string(byte_offset) + ")"),
          name(var) {}
};

struct ArityMismatch : Error {
    ArityMismatch() : Error("argument count does not match program input count") {}
};

struct MultiOutputUnsupported : Error {
    MultiOutputUnsupported() : Error("derivative transform requires a single-output program") {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct SingularConstantTerm : Error {
    SingularConstantTerm() : Error("constant term of matrix is singular") {}
};

struct SeedNotRoot : Error {
    SeedNotRoot() : Error("seed point is not a root of the system at the origin") {}
};

struct SingularJacobianAtSeed : Error {
    SingularJacobianAtSeed() : Error("Jacobian is singular at the seed point") {}
};

struct RetriesExhausted : Error {
    RetriesExhausted(int attempts)
        : Error("no sampled base point passed the rank check after " + std::to_string(attempts) +
                " attempts; the generators may be algebraically dependent") {}
};

struct VerificationFailed : Error {
    VerificationFailed(const std::string& what) : Error(what) {}
};

struct DegreeCeilingExceeded : Error {
    DegreeCeilingExceeded(long ceiling)
        : Error("adaptive precision exceeded the ceiling " + std::to_string(ceiling) +
                "; the target may not lie in the generated subring") {}
};

struct NoSolution : Error {
    NoSolution() : Error("linear system is inconsistent: target is not in the subring at this degree") {}
};

struct NonUniqueSolution : Error {
    NonUniqueSolution()
        : Error("linear system is underdetermined; the generators are algebraically dependent") {}
};

struct NotWeightedHomogeneous : Error {
    int index;
    NotWeightedHomogeneous(int generator_index)
        : Error("generator " + std::to_string(generator_index + 1) + " is not weighted-homogeneous"),
          index(generator_index) {}
};

struct ZeroTarget : Error {
    ZeroTarget() : Error("target polynomial is zero") {}
};

}  // namespace polyrep

#pragma once

#include <stdexcept>
#include <string>

namespace mutkit {

// Malformed or mismatched inputs: variable-list mismatches, dangling
// generator references, open paths where closed ones are required.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation outside the algebraic torus (a coordinate is zero) or a
// section evaluated outside its half-plane domain.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A denominator vanished at the requested point, signalling the locus
// 1 + z_1 + ... + z_{n-1} = 0 where the mutation substitution degenerates.
struct WallError : std::runtime_error {
    explicit WallError(const std::string& msg) : std::runtime_error(msg) {}
};

// A path segment passes through (or too close to) the puncture at 0.
struct SingularityError : std::runtime_error {
    explicit SingularityError(const std::string& msg) : std::runtime_error(msg) {}
};

// A section was evaluated on the branch cut of the n-th root.
struct BranchError : std::runtime_error {
    explicit BranchError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fixture generation exhausted its retry budget.
struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration bounds would produce too many combinatorial types.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// The coboundary squared test failed at an assigned point.
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mutkit

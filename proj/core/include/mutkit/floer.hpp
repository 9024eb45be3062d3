#pragma once

#include <map>
#include <string>
#include <vector>

#include "mutkit/mutation.hpp"

namespace mutkit {

/// One rigid strip between two intersection-point generators, with its signed
/// count and the boundary classes picked up on each Lagrangian.
struct StripDatum {
    std::string from_point;
    std::string to_point;
    long count = 0;
    std::vector<int> class_L;
    std::vector<int> class_K;
};

/// Intersection Floer complex of two Lagrangians carrying rank-one local
/// systems, holonomies kept symbolic. Variable order is the L block followed
/// by the K block; both potentials live in that combined ring, each using
/// only its own block.
struct FloerComplex {
    std::vector<std::string> generators;
    std::vector<StripDatum> strips;
    int rank_L = 0;
    int rank_K = 0;
    LaurentPolynomial potential_L;
    LaurentPolynomial potential_K;

    std::vector<std::string> variable_names() const;
    void validate() const;
};

using HolonomyAssignment = std::map<std::string, GaussianRational>;

using RfMatrix = std::vector<std::vector<RationalFunction>>;

/// Entry (q, p) = sum over strips p -> q of count * x_K^classK * x_L^{-classL}.
RfMatrix coboundary_matrix(const FloerComplex& c);

struct DSquaredReport {
    bool ok = false;
    RfMatrix defect;  // M^2 - (W_L - W_K) Id
};
DSquaredReport verify_d_squared(const FloerComplex& c);

struct FixtureSizes {
    int generators = 4;
    int rank_L = 1;
    int rank_K = 1;
    int max_class = 2;
};
/// Deterministic generator of complexes satisfying the coboundary identity:
/// strips only run from the first half of the generators to the second, so
/// the matrix squares to zero, and the two potentials are a shared constant.
/// Every draw is re-checked symbolically before being returned.
FloerComplex build_consistent_fixture(unsigned seed, const FixtureSizes& sizes = {});

struct HfResult {
    int rank_d = 0;
    int hf_dim = 0;
};
HfResult hf_rank(const FloerComplex& c, const HolonomyAssignment& assign);

struct MutatedComplex {
    std::vector<std::string> generators;
    std::vector<std::string> variables;
    RfMatrix matrix;
    RationalFunction potential_L;
    LaurentPolynomial potential_K;
};
/// Forward mutation substitution applied to every matrix entry and to W_L;
/// W_K is untouched. The rule must keep the K block passive.
MutatedComplex mutate_complex(const FloerComplex& c, const MutationRule& rule);

HfResult hf_rank(const MutatedComplex& c, const HolonomyAssignment& assign);

/// Rank of a matrix of exact Gaussian-rational values.
int exact_rank(std::vector<std::vector<GaussianRational>> m);

std::vector<GaussianRational> assignment_vector(const std::vector<std::string>& variables,
                                                const HolonomyAssignment& assign);

}  // namespace mutkit

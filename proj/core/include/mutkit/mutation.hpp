#pragma once

#include <map>

#include "mutkit/rational_function.hpp"

namespace mutkit {

enum class MutationDirection { forward, inverse };

/// Substitute x_n -> x_n * (1 + sum of fiber variables) (forward) or
/// x_n -> x_n * (1 + sum of fiber variables)^{-1} (inverse); every other
/// variable is fixed. Forward applied to a polynomial with nonnegative
/// x_n-exponents stays Laurent (denominator 1).
RationalFunction apply_mutation(const LaurentPolynomial& w, const MutationRule& rule,
                                MutationDirection direction);
RationalFunction apply_mutation(const RationalFunction& f, const MutationRule& rule,
                                MutationDirection direction);

struct MutatedPotential {
    RationalFunction value;  // W composed with the inverse substitution
    bool is_laurent = false;
    LaurentPolynomial laurent_form;  // valid only when is_laurent
};

/// The potential of the mutated Lagrangian: W_mu = W o mu^{-1}, so
/// W_mu(rho^mu) = W(rho) identically.
MutatedPotential mutate_potential(const LaurentPolynomial& w, const MutationRule& rule);

/// Checks that the forward substitution applied to mutate_potential(w)
/// reproduces w, by exact cross-multiplied comparison.
bool verify_invariance(const LaurentPolynomial& w, const MutationRule& rule);

/// Exact evaluation of a rational function at a named point on the
/// algebraic torus.
GaussianRational eval_at(const RationalFunction& f,
                         const std::map<std::string, GaussianRational>& point);

/// Pushes an assignment through the mutation: the mutated variable's value
/// becomes v * (1 + sum of fiber values). Throws WallError on the wall
/// 1 + sum = 0 and DomainError if the result leaves the torus.
std::vector<GaussianRational> push_forward_point(const std::vector<GaussianRational>& point,
                                                 const MutationRule& rule);

}  // namespace mutkit

#pragma once

#include <map>
#include <string>
#include <vector>

#include "mutkit/gaussian_rational.hpp"

namespace mutkit {

using ExponentVector = std::vector<int>;

/// Multivariate Laurent polynomial over Q(i) with an ordered, positional
/// variable list. Variables are never unified implicitly; mixing bases of
/// H_1(L) and H_1(K) requires an explicit embedding.
///
/// Canonical form: no stored coefficient is zero, every exponent vector has
/// length equal to the variable count, and the term map is ordered, so equal
/// values have identical representations.
class LaurentPolynomial {
  public:
    using TermMap = std::map<ExponentVector, GaussianRational>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(std::vector<std::string> variables)
        : vars_(std::move(variables)) {}

    static LaurentPolynomial zero(std::vector<std::string> variables) {
        return LaurentPolynomial(std::move(variables));
    }
    static LaurentPolynomial constant(std::vector<std::string> variables,
                                      const GaussianRational& c);
    /// The monomial c * prod_j vars[j]^exps[j].
    static LaurentPolynomial monomial(std::vector<std::string> variables,
                                      ExponentVector exps,
                                      const GaussianRational& c);
    /// Single variable with exponent 1.
    static LaurentPolynomial variable(std::vector<std::string> variables,
                                      std::size_t index);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// True iff the polynomial is a single term.
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const ExponentVector& exps, const GaussianRational& c);
    /// *this += c * x^shift * p, without building the intermediate product.
    void add_scaled(const LaurentPolynomial& p, const ExponentVector& shift,
                    const GaussianRational& c);

    LaurentPolynomial operator-() const;
    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

    LaurentPolynomial scaled(const GaussianRational& c) const;
    /// Multiply by the monomial with the given exponent vector (shift).
    LaurentPolynomial shifted(const ExponentVector& shift) const;
    LaurentPolynomial pow(unsigned e) const;

    /// Componentwise minimum of all exponent vectors (zero vector if empty).
    ExponentVector min_exponents() const;
    /// Degree range of one variable: {min, max} exponent (0,0 if absent).
    std::pair<int, int> exponent_range(std::size_t var) const;

    /// Leading term under graded-lexicographic order on the declared
    /// variable order (total degree first, then lex).
    TermMap::const_iterator leading_term_grlex() const;

    /// Exact evaluation; every coordinate must be nonzero since negative
    /// exponents may occur.
    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

    std::string str() const;

  private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

void require_same_variables(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Grlex comparison: returns true if a < b.
bool grlex_less(const ExponentVector& a, const ExponentVector& b);

enum class ArithOp { add, sub, mul };

LaurentPolynomial laurent_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithOp op);

/// Basis data of one local higher mutation: which variable is x_n, which are
/// the fiber variables x_1..x_{n-1}, and which are passive (the y_i plus any
/// other Lagrangian's holonomy variables).
struct MutationRule {
    int n = 2;                               // fiber dimension of the torus segment
    std::size_t mutated_index = 0;           // position of x_n
    std::vector<std::size_t> fiber_indices;  // positions of x_1..x_{n-1}
    std::vector<std::size_t> passive_indices;

    /// Checks the index sets are disjoint, cover 0..var_count-1 and
    /// |fiber| = n-1. Throws StructuralError otherwise.
    void validate(std::size_t var_count) const;

    /// 1 + x_1 + ... + x_{n-1} in the given variable list.
    LaurentPolynomial wall_factor(const std::vector<std::string>& variables) const;
};

}  // namespace mutkit

#pragma once

#include "mutkit/laurent.hpp"

namespace mutkit {

/// Quotient of Laurent polynomials, needed because the inverse mutation
/// substitution maps monomials with negative x_n-power outside the Laurent
/// ring.
///
/// Normal form: numerator and denominator are genuine polynomials sharing no
/// common monomial or polynomial factor, any net monomial unit sits in the
/// numerator (which may therefore be Laurent), and the denominator's leading
/// grlex coefficient is 1.
class RationalFunction {
  public:
    RationalFunction() = default;
    /// Embeds a Laurent polynomial (denominator 1).
    explicit RationalFunction(LaurentPolynomial laurent);
    RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

    const LaurentPolynomial& numerator() const { return num_; }
    const LaurentPolynomial& denominator() const { return den_; }
    const std::vector<std::string>& variables() const { return num_.variables(); }

    bool is_zero() const { return num_.is_zero(); }
    /// True iff the denominator is the constant 1, so the value lies in the
    /// Laurent ring and numerator() is that Laurent polynomial.
    bool is_laurent() const { return den_.is_constant() && !den_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    /// Exact equality by cross multiplication; independent of normal form.
    bool equals(const RationalFunction& o) const;
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.equals(b);
    }

    /// Exact evaluation on the algebraic torus. Throws DomainError on a zero
    /// coordinate and WallError if the denominator vanishes at the point.
    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

    std::string str() const;

  private:
    void normalize();

    LaurentPolynomial num_;
    LaurentPolynomial den_;
};

/// GCD of two polynomials (all exponents >= 0) over Q(i), monic under grlex.
/// Primitive-PRS recursion on the trailing variable; inputs here are small.
LaurentPolynomial polynomial_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Exact division. Returns false if b does not divide a.
bool try_divide(const LaurentPolynomial& a, const LaurentPolynomial& b, LaurentPolynomial& quotient);

}  // namespace mutkit

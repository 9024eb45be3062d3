#include <doctest.h>

#include <random>

#include "mutkit/errors.hpp"
#include "mutkit/mutation.hpp"

using namespace mutkit;

namespace {

const std::vector<std::string> kXY{"x1", "x2"};

LaurentPolynomial var(std::size_t i) { return LaurentPolynomial::variable(kXY, i); }

MutationRule rule_n2() {
    MutationRule r;
    r.n = 2;
    r.mutated_index = 1;
    r.fiber_indices = {0};
    return r;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.inverse() == -i);
    CHECK(i.pow(4) == GaussianRational::one());
    CHECK(i.pow(-3) == i);
    const GaussianRational z(Rational(3, 2), Rational(-1, 4));
    CHECK(z * z.inverse() == GaussianRational::one());
    CHECK(z.conj().norm() == z.norm());
    CHECK_THROWS_AS(GaussianRational::zero().inverse(), DomainError);
}

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(-7, 3)) == "-7/3");
    CHECK(rational_from_string("-7/3") == Rational(-7, 3));
    CHECK(rational_from_string("5") == Rational(5));
}

TEST_CASE("laurent ring basics") {
    const auto x1 = var(0), x2 = var(1);
    CHECK(laurent_arith(x1 + x2, x1 - x2, ArithOp::mul) == x1 * x1 - x2 * x2);

    LaurentPolynomial w(kXY);
    w.add_term({2, -3}, GaussianRational(5));
    CHECK(laurent_arith(w, LaurentPolynomial::zero(kXY), ArithOp::add) == w);
    CHECK((w - w).is_zero());
    CHECK((w - w).term_count() == 0);  // canonical: no zero terms stored

    LaurentPolynomial inv(kXY);
    inv.add_term({0, -1}, GaussianRational::one());
    CHECK(inv * x2 == LaurentPolynomial::constant(kXY, GaussianRational::one()));

    const std::vector<std::string> other{"y"};
    CHECK_THROWS_AS(laurent_arith(w, LaurentPolynomial::zero(other), ArithOp::add),
                    StructuralError);
}

TEST_CASE("laurent evaluation") {
    LaurentPolynomial w(kXY);
    w.add_term({1, 0}, GaussianRational::one());
    w.add_term({0, 1}, GaussianRational::one());
    w.add_term({-1, -1}, GaussianRational::one());
    CHECK(w.evaluate({GaussianRational::one(), GaussianRational::one()}) == GaussianRational(3));
    CHECK_THROWS_AS(w.evaluate({GaussianRational::zero(), GaussianRational::one()}), DomainError);
}

TEST_CASE("rational function normalization") {
    const auto x1 = var(0), x2 = var(1);
    const auto one = LaurentPolynomial::constant(kXY, GaussianRational::one());
    // (x1^2 - x2^2) / (x1 - x2) reduces to x1 + x2
    const RationalFunction f(x1 * x1 - x2 * x2, x1 - x2);
    CHECK(f.is_laurent());
    CHECK(f.numerator() == x1 + x2);
    CHECK(f.denominator() == one);

    // a pure monomial quotient folds into the numerator
    const RationalFunction g(one, x2);
    CHECK(g.is_laurent());
    CHECK(g.numerator().terms().begin()->first == ExponentVector{0, -1});

    const RationalFunction h(x2, x1 + x2);
    CHECK(!h.is_laurent());
    CHECK(h.equals(RationalFunction(x2 * x2, (x1 + x2) * x2)));
    CHECK_THROWS_AS(h.evaluate({GaussianRational(-1), GaussianRational::one()}), WallError);
}

TEST_CASE("forward mutation examples") {
    const auto rule = rule_n2();
    const auto x1 = var(0), x2 = var(1);

    const auto fwd = apply_mutation(x2, rule, MutationDirection::forward);
    CHECK(fwd.is_laurent());
    CHECK(fwd.numerator() == x2 + x1 * x2);

    const auto fixed = apply_mutation(x1, rule, MutationDirection::forward);
    CHECK(fixed.is_laurent());
    CHECK(fixed.numerator() == x1);

    LaurentPolynomial x2inv(kXY);
    x2inv.add_term({0, -1}, GaussianRational::one());
    const auto neg = apply_mutation(x2inv, rule, MutationDirection::forward);
    CHECK(!neg.is_laurent());
    // numerator 1, denominator x2 (1 + x1), up to the monomial normal form
    const auto wall = rule.wall_factor(kXY);
    CHECK(neg.equals(RationalFunction(LaurentPolynomial::constant(kXY, GaussianRational::one()),
                                      x2 * wall)));
}

TEST_CASE("mutated potential examples") {
    const auto rule = rule_n2();
    const auto x1 = var(0), x2 = var(1);

    const auto back = mutate_potential(x2 + x1 * x2, rule);
    CHECK(back.is_laurent);
    CHECK(back.laurent_form == x2);

    const auto fixed = mutate_potential(x1, rule);
    CHECK(fixed.is_laurent);
    CHECK(fixed.laurent_form == x1);

    LaurentPolynomial x2inv(kXY);
    x2inv.add_term({0, -1}, GaussianRational::one());
    const auto m = mutate_potential(x2inv, rule);
    CHECK(m.is_laurent);
    LaurentPolynomial expected(kXY);  // x2^{-1} (1 + x1)
    expected.add_term({0, -1}, GaussianRational::one());
    expected.add_term({1, -1}, GaussianRational::one());
    CHECK(m.laurent_form == expected);
}

TEST_CASE("invariance on explicit potentials") {
    const auto rule = rule_n2();
    LaurentPolynomial w(kXY);  // x2 + x1^{-1} x2^{-1}
    w.add_term({0, 1}, GaussianRational::one());
    w.add_term({-1, -1}, GaussianRational::one());
    CHECK(verify_invariance(w, rule));
    CHECK(verify_invariance(LaurentPolynomial::zero(kXY), rule));
}

TEST_CASE("mutation is a ring homomorphism") {
    const auto rule = rule_n2();
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> exp(-3, 3), coeff(-5, 5);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentPolynomial a(kXY), b(kXY);
        for (int t = 0; t < 4; ++t) {
            a.add_term({exp(rng), exp(rng)}, GaussianRational(coeff(rng), coeff(rng)));
            b.add_term({exp(rng), exp(rng)}, GaussianRational(coeff(rng), coeff(rng)));
        }
        for (auto dir : {MutationDirection::forward, MutationDirection::inverse}) {
            const auto ma = apply_mutation(a, rule, dir);
            const auto mb = apply_mutation(b, rule, dir);
            CHECK(apply_mutation(a + b, rule, dir).equals(ma + mb));
            CHECK(apply_mutation(a * b, rule, dir).equals(ma * mb));
        }
    }
}

TEST_CASE("evaluation compatibility with the point push-forward") {
    const auto rule = rule_n2();
    LaurentPolynomial w(kXY);
    w.add_term({2, 1}, GaussianRational(3));
    w.add_term({-1, 2}, GaussianRational(1, 2));
    const auto fwd = apply_mutation(w, rule, MutationDirection::forward);
    const std::vector<GaussianRational> p{GaussianRational(2), GaussianRational(Rational(1, 3))};
    CHECK(fwd.evaluate(p) == w.evaluate(push_forward_point(p, rule)));
    CHECK_THROWS_AS(push_forward_point({GaussianRational(-1), GaussianRational(1)}, rule),
                    WallError);
}

TEST_CASE("eval_at named points") {
    const auto x1 = var(0), x2 = var(1);
    const auto one = LaurentPolynomial::constant(kXY, GaussianRational::one());
    const RationalFunction f(x2 * (one + x1));
    CHECK(eval_at(f, {{"x1", GaussianRational(1)}, {"x2", GaussianRational(2)}}) ==
          GaussianRational(4));
    const RationalFunction g(one, one + x1);
    CHECK_THROWS_AS(eval_at(g, {{"x1", GaussianRational(-1)}, {"x2", GaussianRational(1)}}),
                    WallError);
}

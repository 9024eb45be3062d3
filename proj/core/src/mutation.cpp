#include "mutkit/mutation.hpp"

#include <algorithm>

#include "mutkit/errors.hpp"

namespace mutkit {

namespace {

// Powers 0..max of the wall factor 1 + sum of fiber variables.
std::vector<LaurentPolynomial> wall_powers(const LaurentPolynomial& wall, int max) {
    std::vector<LaurentPolynomial> p;
    p.reserve(max + 1);
    p.push_back(LaurentPolynomial::constant(wall.variables(), GaussianRational::one()));
    for (int k = 1; k <= max; ++k) p.push_back(p.back() * wall);
    return p;
}

// Substituted numerator and the wall power of the denominator, before any
// reduction. x_n^e picks up wall^e (forward) or wall^{-e} (inverse); one
// global wall power in the denominator clears the negative exponents. The
// caller supplies a table of wall powers large enough for the exponent range
// of w (max(0, hi) - min(0, lo) always suffices for either direction).
std::pair<LaurentPolynomial, int> raw_apply(const LaurentPolynomial& w, std::size_t xn,
                                            const std::vector<LaurentPolynomial>& powers,
                                            MutationDirection direction) {
    const auto [lo, hi] = w.exponent_range(xn);
    LaurentPolynomial num(w.variables());
    int den_power;
    if (direction == MutationDirection::forward) {
        den_power = std::max(0, -lo);
        for (const auto& [e, c] : w.terms()) num.add_scaled(powers[e[xn] + den_power], e, c);
    } else {
        den_power = std::max(0, hi);
        for (const auto& [e, c] : w.terms()) num.add_scaled(powers[den_power - e[xn]], e, c);
    }
    return {std::move(num), den_power};
}

}  // namespace

RationalFunction apply_mutation(const LaurentPolynomial& w, const MutationRule& rule,
                                MutationDirection direction) {
    rule.validate(w.variables().size());
    if (w.is_zero()) return RationalFunction(w);
    const LaurentPolynomial wall = rule.wall_factor(w.variables());
    const auto [lo, hi] = w.exponent_range(rule.mutated_index);
    const auto powers = wall_powers(wall, std::max(0, hi) - std::min(0, lo));
    auto [num, den_power] = raw_apply(w, rule.mutated_index, powers, direction);
    return RationalFunction(std::move(num), powers[std::size_t(den_power)]);
}

RationalFunction apply_mutation(const RationalFunction& f, const MutationRule& rule,
                                MutationDirection direction) {
    const RationalFunction n = apply_mutation(f.numerator(), rule, direction);
    const RationalFunction d = apply_mutation(f.denominator(), rule, direction);
    return RationalFunction(n.numerator() * d.denominator(), n.denominator() * d.numerator());
}

MutatedPotential mutate_potential(const LaurentPolynomial& w, const MutationRule& rule) {
    MutatedPotential out;
    out.value = apply_mutation(w, rule, MutationDirection::inverse);
    out.is_laurent = out.value.is_laurent();
    if (out.is_laurent) out.laurent_form = out.value.numerator();
    return out;
}

bool verify_invariance(const LaurentPolynomial& w, const MutationRule& rule) {
    rule.validate(w.variables().size());
    // Compose the raw substitutions; since the wall factor contains no x_n it
    // is fixed by both, and the identity cross-multiplies to an equality of
    // Laurent polynomials — no fraction reduction is needed anywhere.
    const LaurentPolynomial wall = rule.wall_factor(w.variables());
    // One power table covers the inverse pass, the forward pass (the wall has
    // no x_n, so the composite has the same x_n range as w), and the
    // right-hand side wall^{a+h}.
    const auto [lo, hi] = w.exponent_range(rule.mutated_index);
    const auto powers = wall_powers(wall, std::max(0, hi) - std::min(0, lo));
    const auto [n1, h] = raw_apply(w, rule.mutated_index, powers, MutationDirection::inverse);
    const auto [n2, a] = raw_apply(n1, rule.mutated_index, powers, MutationDirection::forward);
    LaurentPolynomial rhs(w.variables());
    for (const auto& [e, c] : w.terms()) rhs.add_scaled(powers[std::size_t(a + h)], e, c);
    return n2 == rhs;
}

GaussianRational eval_at(const RationalFunction& f,
                         const std::map<std::string, GaussianRational>& point) {
    const auto& vars = f.variables();
    std::vector<GaussianRational> values;
    values.reserve(vars.size());
    for (const auto& v : vars) {
        auto it = point.find(v);
        if (it == point.end()) throw StructuralError("no value assigned to variable '" + v + "'");
        if (it->second.is_zero())
            throw DomainError("variable '" + v + "' assigned zero; points live in the torus");
        values.push_back(it->second);
    }
    return f.evaluate(values);
}

std::vector<GaussianRational> push_forward_point(const std::vector<GaussianRational>& point,
                                                 const MutationRule& rule) {
    rule.validate(point.size());
    GaussianRational wall = GaussianRational::one();
    for (auto i : rule.fiber_indices) wall += point[i];
    if (wall.is_zero()) throw WallError("point lies on the wall 1 + sum z_i = 0");
    std::vector<GaussianRational> out = point;
    out[rule.mutated_index] *= wall;
    if (out[rule.mutated_index].is_zero())
        throw DomainError("pushed-forward point leaves the algebraic torus");
    return out;
}

}  // namespace mutkit

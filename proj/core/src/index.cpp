#include "mutkit/index.hpp"

#include <algorithm>
#include <numbers>

#include "mutkit/errors.hpp"

namespace mutkit {

void IndexData::validate() const {
    if (n < 2) throw DomainError("index data needs n >= 2");
    if (weighted_infinity < 0) throw DomainError("weighted infinity count must be nonnegative");
    for (const auto& touch : critical_touches) {
        if (touch.size() < 2 || int(touch.size()) > n)
            throw StructuralError("critical touch needs between 2 and n vanishing orders");
        if (!std::is_sorted(touch.begin(), touch.end()))
            throw StructuralError("vanishing orders must be sorted nondecreasing");
        if (touch.front() < 1) throw StructuralError("vanishing orders must be positive");
    }
}

int critical_multiplicity(const IndexData& d) {
    d.validate();
    int total = 0;
    for (const auto& touch : d.critical_touches) {
        // all orders except the largest at each touch
        for (std::size_t q = 0; q + 1 < touch.size(); ++q) total += touch[q];
    }
    return total;
}

int disc_index(const IndexData& d) {
    d.validate();
    return d.n + d.maslov - d.weighted_infinity;
}

int single_puncture_index(int n, int k) {
    if (n < 2) throw DomainError("need n >= 2");
    if (k < 1) throw DomainError("need k >= 1");
    return n + k;
}

std::pair<int, int> split_indices(const IndexData& d) {
    const int mc = critical_multiplicity(d);
    const int vertical = d.n - 1 + 2 * mc;
    const int horizontal = 1 + d.maslov - d.weighted_infinity - 2 * mc;
    return {vertical, horizontal};
}

int virtual_dimension(int ind, int punctures, int n, int aut) {
    if (punctures < 0 || aut < 0) throw DomainError("counts must be nonnegative");
    return ind - punctures * (n - 1) - aut;
}

SobolevWindow sobolev_weight_window(int n) {
    if (n < 2) throw DomainError("need n >= 2");
    return {0.0, std::numbers::pi / n};
}

MonotonicityReport monotonicity_constant(const std::vector<DiscClass>& classes,
                                         MonotonicityMode mode) {
    if (classes.empty()) throw StructuralError("no disc classes given");
    MonotonicityReport rep;
    const Rational factor = (mode == MonotonicityMode::pair) ? Rational(2) : Rational(1);
    std::optional<Rational> c;
    for (const auto& cls : classes) {
        if (cls.maslov == 0) {
            if (cls.area != 0) return rep;  // inconsistent: area with no index
            continue;
        }
        Rational candidate = factor * cls.area / Rational(cls.maslov);
        if (!c) {
            c = candidate;
        } else if (*c != candidate) {
            return rep;
        }
    }
    if (!c) throw StructuralError("need at least one class with nonzero maslov");
    if (*c <= 0) return rep;
    rep.constant = *c;
    rep.consistent = true;
    return rep;
}

}  // namespace mutkit

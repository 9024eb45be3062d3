#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mutkit/gaussian_rational.hpp"

namespace mutkit {

struct IndexData {
    int n = 2;
    int maslov = 0;
    int weighted_infinity = 0;
    // per touch point: sorted nondecreasing vanishing orders, length in [2, n]
    std::vector<std::vector<int>> critical_touches;

    void validate() const;
};

struct DiscClass {
    Rational area;
    int maslov = 0;
    std::vector<long> boundary_class;
};

struct MonotonicityReport {
    std::optional<Rational> constant;
    bool consistent = false;
};

enum class MonotonicityMode { pair, lagrangian };  // 2w = tau*mu  vs  w = lambda*mu

int critical_multiplicity(const IndexData& d);
int disc_index(const IndexData& d);
int single_puncture_index(int n, int k);
std::pair<int, int> split_indices(const IndexData& d);  // (vertical, horizontal)
int virtual_dimension(int ind, int punctures, int n, int aut);

struct SobolevWindow {
    double lo;  // open
    double hi;  // open
    bool contains(double delta) const { return delta > lo && delta < hi; }
};
SobolevWindow sobolev_weight_window(int n);

MonotonicityReport monotonicity_constant(const std::vector<DiscClass>& classes,
                                         MonotonicityMode mode);

}  // namespace mutkit

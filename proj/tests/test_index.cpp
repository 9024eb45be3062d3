#include <doctest.h>

#include <random>

#include "mutkit/errors.hpp"
#include "mutkit/index.hpp"

using namespace mutkit;

TEST_CASE("critical multiplicity") {
    CHECK(critical_multiplicity({3, 0, 0, {}}) == 0);
    CHECK(critical_multiplicity({3, 0, 0, {{1, 1}}}) == 1);
    CHECK(critical_multiplicity({4, 0, 0, {{1, 2, 3}, {2, 2}}}) == 5);
    CHECK_THROWS_AS(critical_multiplicity({3, 0, 0, {{1}}}), StructuralError);
    CHECK_THROWS_AS(critical_multiplicity({3, 0, 0, {{2, 1}}}), StructuralError);

    // monotone under entrywise increase, additive over touch lists
    CHECK(critical_multiplicity({4, 0, 0, {{2, 3, 3}}}) >
          critical_multiplicity({4, 0, 0, {{1, 2, 3}}}));
    CHECK(critical_multiplicity({4, 0, 0, {{1, 2, 3}, {2, 2}}}) ==
          critical_multiplicity({4, 0, 0, {{1, 2, 3}}}) +
              critical_multiplicity({4, 0, 0, {{2, 2}}}));
}

TEST_CASE("disc and puncture indices") {
    CHECK(disc_index({3, 2, 1, {}}) == 4);
    CHECK(disc_index({2, 0, 0, {}}) == 2);
    CHECK(disc_index({4, 4, 2, {}}) == 6);
    CHECK(single_puncture_index(3, 1) == 4);
    CHECK(single_puncture_index(2, 1) == 3);
    CHECK(single_puncture_index(2, 5) == 7);
    for (int n = 2; n <= 10; ++n)
        CHECK(disc_index({n, 2, 1, {}}) == single_puncture_index(n, 1));
}

TEST_CASE("index splitting") {
    CHECK(split_indices({3, 2, 1, {}}) == std::pair<int, int>(2, 2));
    CHECK(split_indices({3, 2, 1, {{1, 1}}}) == std::pair<int, int>(4, 0));

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> nn(2, 6), mu(-6, 6), w(0, 4), order(1, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        IndexData d;
        d.n = nn(rng);
        d.maslov = mu(rng);
        d.weighted_infinity = w(rng);
        if (trial % 2) {
            std::vector<int> touch{order(rng), order(rng)};
            if (touch[0] > touch[1]) std::swap(touch[0], touch[1]);
            d.critical_touches.push_back(touch);
        }
        const auto [v, h] = split_indices(d);
        CHECK(v + h == disc_index(d));
    }
}

TEST_CASE("virtual dimension") {
    CHECK(virtual_dimension(3, 1, 2, 1) == 1);
    CHECK(virtual_dimension(7, 0, 5, 0) == 7);
    for (int n = 2; n <= 6; ++n) {
        CHECK(virtual_dimension(n + 1, 1, n, 2) == 0);
        CHECK(virtual_dimension(5, 2, n, 0) < virtual_dimension(5, 1, n, 0));
    }
}

TEST_CASE("sobolev weight window") {
    const auto w2 = sobolev_weight_window(2);
    CHECK(w2.lo == 0.0);
    CHECK(w2.hi == doctest::Approx(1.5707963267948966));
    CHECK(w2.contains(1.5));
    CHECK(!w2.contains(1.6));
    CHECK(!w2.contains(0.0));
    CHECK(sobolev_weight_window(4).hi == doctest::Approx(0.7853981633974483));
}

TEST_CASE("monotonicity constants") {
    auto cls = [](long area_num, long area_den, int mu) {
        DiscClass c;
        c.area = Rational(area_num, area_den);
        c.maslov = mu;
        return c;
    };

    const auto lag = monotonicity_constant({cls(1, 1, 2), cls(2, 1, 4)},
                                           MonotonicityMode::lagrangian);
    CHECK(lag.consistent);
    CHECK(*lag.constant == Rational(1, 2));

    CHECK(!monotonicity_constant({cls(1, 1, 2), cls(3, 1, 4)}, MonotonicityMode::lagrangian)
               .consistent);

    const auto pair = monotonicity_constant({cls(1, 1, 2)}, MonotonicityMode::pair);
    CHECK(pair.consistent);
    CHECK(*pair.constant == Rational(1));

    // invariance under duplication and integer scaling
    const auto dup = monotonicity_constant({cls(1, 1, 2), cls(1, 1, 2), cls(3, 1, 6)},
                                           MonotonicityMode::lagrangian);
    CHECK(dup.consistent);
    CHECK(*dup.constant == *lag.constant);

    // zero-index class with area breaks the relation
    CHECK(!monotonicity_constant({cls(1, 1, 2), cls(1, 1, 0)}, MonotonicityMode::lagrangian)
               .consistent);

    CHECK_THROWS_AS(monotonicity_constant({}, MonotonicityMode::pair), StructuralError);
    CHECK_THROWS_AS(monotonicity_constant({cls(0, 1, 0)}, MonotonicityMode::pair),
                    StructuralError);
}

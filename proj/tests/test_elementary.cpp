#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mutkit/elementary.hpp"
#include "mutkit/errors.hpp"

using namespace mutkit;
using std::numbers::pi;
using C = std::complex<double>;

namespace {

ElementarySection make(int n, double eps, SectionSide side, int k = 1,
                       std::vector<double> theta = {}) {
    ElementarySection s;
    s.n = n;
    s.eps = eps;
    s.side = side;
    s.k = k;
    s.theta = theta.empty() ? std::vector<double>(std::size_t(n - 1), 0.0) : std::move(theta);
    return s;
}

GridSpec domain_grid(const ElementarySection& s) {
    GridSpec g;
    const double line = s.side == SectionSide::upper ? s.eps : -s.eps;
    g.corner = C(-1.0, line + 0.05);
    g.width = 2.0;
    g.height = 1.0;
    return g;
}

}  // namespace

TEST_CASE("branch of the n-th root") {
    CHECK(std::abs(root_n({1, 0}, 2) - C(1, 0)) < 1e-15);
    CHECK(std::abs(root_n({0, 1}, 2) - std::polar(1.0, pi / 4)) < 1e-15);
    // just left of the cut the root is continuous with the upper plane
    CHECK(std::abs(root_n({-1e-9, -1}, 2) - std::polar(1.0, 3 * pi / 4)) < 1e-6);
    // and just right of it the argument is near -pi/4 (no jump through the cut)
    CHECK(std::abs(root_n({1e-9, -1}, 2) - std::polar(1.0, -pi / 4)) < 1e-6);
    CHECK_THROWS_AS(root_n({0, -1}, 3), BranchError);
}

TEST_CASE("section evaluation examples") {
    const auto upper = make(2, 0.5, SectionSide::upper);
    const auto z1 = evaluate_section(upper, {1, 1});
    CHECK(std::abs(z1[0] - z1[1]) < 1e-15);

    const auto at_one = evaluate_section(make(2, 0.3, SectionSide::upper), {0, 1});
    CHECK(std::abs(at_one[0] * at_one[1] - C(0, 1)) < 1e-15);

    for (int n = 2; n <= 4; ++n) {
        const double eps = 0.25;
        const auto lower = make(n, eps, SectionSide::lower, 1);
        const auto z = evaluate_section(lower, {0, 0});
        CHECK(std::abs(z[0]) < 1e-15);
        for (int j = 1; j < n; ++j) {
            CHECK(std::abs(z[std::size_t(j)]) ==
                  doctest::Approx(std::pow(2 * eps, 1.0 / n)));
            CHECK(std::arg(z[std::size_t(j)]) == doctest::Approx(pi / (2 * n)));
        }
    }

    const auto rotated = make(2, 0.5, SectionSide::upper, 1, {pi});
    const auto z2 = evaluate_section(rotated, {1, 1});
    const auto base = evaluate_section(make(2, 0.5, SectionSide::upper), {1, 1});
    CHECK(std::abs(z2[0] + base[0]) < 1e-15);  // e^{i pi} factor
    CHECK(std::abs(z2[1] + base[1]) < 1e-15);  // e^{-i pi} factor

    CHECK_THROWS_AS(evaluate_section(upper, {0, 0}), DomainError);
}

TEST_CASE("phase action equivariance") {
    const std::vector<double> theta{0.7, -1.3};
    const auto s = make(3, 0.4, SectionSide::lower, 2, theta);
    const auto plain = make(3, 0.4, SectionSide::lower, 2);
    const C z(0.6, 0.9);
    const auto a = evaluate_section(s, z);
    const auto b = evaluate_section(plain, z);
    CHECK(std::abs(a[0] - b[0] * std::polar(1.0, theta[0])) < 1e-15);
    CHECK(std::abs(a[1] - b[1] * std::polar(1.0, theta[1])) < 1e-15);
    CHECK(std::abs(a[2] - b[2] * std::polar(1.0, -theta[0] - theta[1])) < 1e-15);
}

TEST_CASE("cauchy-riemann residual") {
    const auto s = make(3, 0.5, SectionSide::lower, 2);
    GridSpec g = domain_grid(s);
    CHECK(cr_residual(s, g) < 1e-8);

    GridSpec coarse = g, fine = g;
    coarse.h = 4e-4;
    fine.h = 2e-4;
    coarse.nx = coarse.ny = fine.nx = fine.ny = 10;
    const double ratio = cr_residual(s, coarse) / cr_residual(s, fine);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.2));

    // anti-holomorphic control: conjugating the argument breaks the identity
    const double h = 1e-3;
    // keep conj(z +- h), conj(z +- ih) inside the half-plane Im >= -eps
    const C z(0.4, 0.3);
    auto conj_eval = [&](C w) { return evaluate_section(s, std::conj(w))[0]; };
    const C dx = (conj_eval(z + h) - conj_eval(z - h)) / (2 * h);
    const C dy = (conj_eval(z + C(0, h)) - conj_eval(z - C(0, h))) / (2 * h);
    CHECK(std::abs(dx + C(0, 1) * dy) > 0.01);

    GridSpec bad = g;
    bad.corner = C(-1.0, (s.side == SectionSide::upper ? s.eps : -s.eps) - 1.0);
    CHECK_THROWS_AS(cr_residual(s, bad), BranchError);
}

TEST_CASE("defining properties on random samples") {
    for (int n : {2, 3, 4}) {
        for (double eps : {0.1, 0.5}) {
            const auto up = verify_section_properties(make(n, eps, SectionSide::upper));
            CHECK(up.ok);
            CHECK(up.projection_residual < 1e-12);
            CHECK(up.modulus_spread < 1e-12);
            for (int k = 1; k <= n; ++k) {
                const auto low = verify_section_properties(make(n, eps, SectionSide::lower, k));
                CHECK(low.ok);
                CHECK(low.projection_residual < 1e-12);
                CHECK(low.modulus_spread < 1e-12);
            }
        }
    }

    // sampling the moduli on the wrong horizontal line breaks the equal-moduli
    // boundary condition by a visible margin
    const auto s = make(2, 0.5, SectionSide::lower, 1);
    const auto z = evaluate_section(s, {1.0, -0.2});
    CHECK(std::abs(std::abs(z[0]) - std::abs(z[1])) > 1e-3);
}

TEST_CASE("count table") {
    CHECK(elementary_count(SectionSide::upper, false, 5) == 1);
    CHECK(elementary_count(SectionSide::lower, false, 5) == 5);
    CHECK(elementary_count(SectionSide::upper, true, 5) == 5);
    CHECK(elementary_count(SectionSide::lower, true, 5) == 1);
    for (int n = 2; n <= 8; ++n) {
        const int before = elementary_count(SectionSide::upper, false, n) +
                           elementary_count(SectionSide::lower, false, n);
        const int after = elementary_count(SectionSide::upper, true, n) +
                          elementary_count(SectionSide::lower, true, n);
        CHECK(before == n + 1);
        CHECK(after == n + 1);
    }
}

TEST_CASE("chord endpoint signs") {
    CHECK(reeb_endpoint_sign(+1, 1) == -1);
    CHECK(reeb_endpoint_sign(+1, 2) == +1);
    CHECK(reeb_endpoint_sign(-1, 3) == +1);
    for (int l = 1; l <= 6; ++l)
        for (int s : {-1, +1})
            CHECK(reeb_endpoint_sign(reeb_endpoint_sign(s, l), l) == (l % 2 == 0 ? s : s));
    CHECK_THROWS_AS(reeb_endpoint_sign(0, 1), DomainError);
}

TEST_CASE("index witness") {
    for (int n = 2; n <= 6; ++n) {
        const auto w = elementary_index_witness(n);
        CHECK(w.maslov == 2);
        CHECK(w.weighted_infinity == 1);
        CHECK(w.index == n + 1);
    }
}

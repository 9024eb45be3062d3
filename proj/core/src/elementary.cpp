#include "mutkit/elementary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mutkit/errors.hpp"

namespace mutkit {

namespace {

using C = std::complex<double>;

double boundary_line(const ElementarySection& s) {
    return s.side == SectionSide::upper ? s.eps : -s.eps;
}

}  // namespace

void ElementarySection::validate() const {
    if (n < 2) throw DomainError("section needs n >= 2");
    if (eps <= 0) throw DomainError("section needs eps > 0");
    if (side == SectionSide::lower && (k < 1 || k > n))
        throw DomainError("lower section needs k in [1, n]");
    if (int(theta.size()) != n - 1) throw StructuralError("section needs n-1 phase angles");
}

C root_n(C z, int n) {
    if (z == C(0, 0)) return C(0, 0);
    // cut sits along the negative imaginary axis; rotate it onto the negative
    // real axis where std::log has its cut
    if (std::real(z) == 0.0 && std::imag(z) < 0.0)
        throw BranchError("n-th root evaluated on the branch cut");
    const C rotated = C(0, -1) * z;
    return std::exp((std::log(rotated) + C(0, std::numbers::pi / 2)) / double(n));
}

std::vector<C> evaluate_section(const ElementarySection& s, C z) {
    s.validate();
    const double floor_im = boundary_line(s);
    if (std::imag(z) < floor_im - 1e-12)
        throw DomainError("point below the section's half-plane");

    std::vector<C> out(s.n);
    if (s.side == SectionSide::upper) {
        const C r = root_n(z, s.n);
        std::fill(out.begin(), out.end(), r);
    } else {
        const C shifted = z + C(0, 2 * s.eps);
        const C r = root_n(shifted, s.n);
        std::fill(out.begin(), out.end(), r);
        out[s.k - 1] = (z / shifted) * r;
    }

    double sum = 0;
    for (int j = 0; j < s.n - 1; ++j) {
        out[j] *= std::polar(1.0, s.theta[j]);
        sum += s.theta[j];
    }
    out[s.n - 1] *= std::polar(1.0, -sum);
    return out;
}

double cr_residual(const ElementarySection& s, const GridSpec& grid) {
    s.validate();
    if (grid.nx < 2 || grid.ny < 2 || grid.h <= 0) throw DomainError("bad grid spec");
    if (std::imag(grid.corner) - grid.h < boundary_line(s))
        throw BranchError("grid stencil leaves the section's domain");
    double worst = 0;
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const C z = grid.corner + C(grid.width * ix / (grid.nx - 1),
                                        grid.height * iy / (grid.ny - 1));
            const auto xp = evaluate_section(s, z + grid.h);
            const auto xm = evaluate_section(s, z - grid.h);
            const auto yp = evaluate_section(s, z + C(0, grid.h));
            const auto ym = evaluate_section(s, z - C(0, grid.h));
            for (int j = 0; j < s.n; ++j) {
                const C dx = (xp[j] - xm[j]) / (2 * grid.h);
                const C dy = (yp[j] - ym[j]) / (2 * grid.h);
                worst = std::max(worst, std::abs(dx + C(0, 1) * dy));
            }
        }
    }
    return worst;
}

SectionReport verify_section_properties(const ElementarySection& s, int samples, unsigned seed) {
    s.validate();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> re(-3.0, 3.0);
    std::uniform_real_distribution<double> up(0.0, 3.0);
    const double line = boundary_line(s);

    SectionReport rep;
    for (int i = 0; i < samples; ++i) {
        const C z(re(rng), line + up(rng));
        const auto w = evaluate_section(s, z);
        C prod(1, 0);
        for (const C& c : w) prod *= c;
        rep.projection_residual = std::max(rep.projection_residual, std::abs(prod - z));
    }
    for (int i = 0; i < samples; ++i) {
        const C z(re(rng), line);
        const auto w = evaluate_section(s, z);
        double lo = std::abs(w[0]), hi = lo;
        for (const C& c : w) {
            lo = std::min(lo, std::abs(c));
            hi = std::max(hi, std::abs(c));
        }
        rep.modulus_spread = std::max(rep.modulus_spread, hi - lo);
    }
    rep.ok = rep.projection_residual < 1e-10 && rep.modulus_spread < 1e-10;
    return rep;
}

int elementary_count(SectionSide side, bool mutated, int n) {
    if (n < 2) throw DomainError("need n >= 2");
    const bool one = (side == SectionSide::upper) != mutated;
    return one ? 1 : n;
}

int reeb_endpoint_sign(int start_sign, int l) {
    if (l < 1) throw DomainError("chord multiplicity must be positive");
    if (start_sign != 1 && start_sign != -1) throw DomainError("sign must be +1 or -1");
    return (l % 2 == 0) ? start_sign : -start_sign;
}

IndexWitness elementary_index_witness(int n) {
    if (n < 2) throw DomainError("need n >= 2");
    return {2, 1, n + 1};
}

}  // namespace mutkit

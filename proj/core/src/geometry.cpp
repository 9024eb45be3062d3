#include "mutkit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mutkit/errors.hpp"

namespace mutkit {

namespace {

constexpr double kOriginClearance = 1e-12;

// Gauss-Kronrod 7-15 nodes on [-1,1] (positive half; symmetric).
constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
// Gauss-7 weights, aligned with Kronrod nodes 1, 3, 5, 7.
constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

double lambda_integrand(const PathSegment& seg, double t, int n) {
    const Complex z = segment_point(seg, t);
    const double r2 = std::norm(z);
    if (r2 < kOriginClearance * kOriginClearance)
        throw SingularityError("path passes through the origin");
    const Complex dz = segment_derivative(seg, t);
    // x dy - y dx = Im(conj(z) dz)
    const double num = std::imag(std::conj(z) * dz);
    return num / (2.0 * std::pow(r2, double(n - 1) / double(n)));
}

struct GkResult {
    double value;
    double error;
};

GkResult gk15(const PathSegment& seg, int n, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double gauss = 0, kronrod = 0;
    for (int i = 0; i < 8; ++i) {
        const double f = (i == 7) ? lambda_integrand(seg, mid, n)
                                  : lambda_integrand(seg, mid - half * kKronrodNodes[i], n) +
                                        lambda_integrand(seg, mid + half * kKronrodNodes[i], n);
        kronrod += kKronrodWeights[i] * f;
        // Gauss-7 nodes are the odd-indexed Kronrod nodes plus the center.
        if (i % 2 == 1 || i == 7) gauss += kGaussWeights[i / 2] * f;
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

double adaptive_segment(const PathSegment& seg, int n, double a, double b, double tol, int depth) {
    const GkResult r = gk15(seg, n, a, b);
    if (r.error <= tol || depth >= 40) return r.value;
    const double mid = 0.5 * (a + b);
    return adaptive_segment(seg, n, a, mid, tol / 2, depth + 1) +
           adaptive_segment(seg, n, mid, b, tol / 2, depth + 1);
}

double integrate_segment(const PathSegment& seg, const GeometryContext& ctx, double tol) {
    return adaptive_segment(seg, ctx.n, 0.0, 1.0, tol, 0);
}

std::vector<Complex> sample_path(const PlanarPath& path, int per_segment) {
    std::vector<Complex> pts;
    pts.reserve(path.segments().size() * per_segment + 1);
    for (const auto& seg : path.segments()) {
        for (int i = 0; i < per_segment; ++i)
            pts.push_back(segment_point(seg, double(i) / per_segment));
    }
    pts.push_back(path.end());
    return pts;
}

double total_arg_increment(const std::vector<Complex>& pts, Complex about) {
    double total = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Complex a = pts[i] - about;
        const Complex b = pts[i + 1] - about;
        if (std::abs(a) < kOriginClearance || std::abs(b) < kOriginClearance)
            throw SingularityError("winding base point lies on the path");
        total += std::arg(b / a);
    }
    return total;
}

}  // namespace

GeometryContext::GeometryContext(int n_, double tol_) : n(n_), tol(tol_) {
    if (n < 2) throw DomainError("geometry context needs n >= 2");
    if (tol <= 0) throw DomainError("geometry tolerance must be positive");
}

double integrate_lambda_n(const PlanarPath& path, const GeometryContext& ctx) {
    const double per_segment_tol = ctx.tol / double(path.segments().size());
    double total = 0;
    for (const auto& seg : path.segments()) total += integrate_segment(seg, ctx, per_segment_tol);
    return total;
}

AdmissibilityReport is_admissible(const PlanarPath& path, double t, double eps,
                                  const GeometryContext& ctx) {
    if (!(0 < eps && eps < t)) throw DomainError("admissibility requires 0 < eps < t");
    AdmissibilityReport rep;
    const int samples = 2048;
    bool bad_identity = false, bad_disc = false, bad_half_plane = false;
    for (int i = 0; i <= samples; ++i) {
        const Complex z = path.point(double(i) / samples);
        if (std::imag(z) < -ctx.tol) bad_half_plane = true;
        if (std::abs(std::real(z)) >= eps) {
            // outside the bump window the path must run along the real axis
            if (std::abs(std::imag(z)) > ctx.tol) bad_identity = true;
        } else {
            if (std::abs(z) > t - eps + ctx.tol) bad_disc = true;
        }
    }
    if (bad_identity) rep.violations.push_back("identity outside bump window");
    if (bad_disc) rep.violations.push_back("middle portion leaves disc");
    if (bad_half_plane) rep.violations.push_back("upper half plane");
    rep.ok = rep.violations.empty();
    return rep;
}

int winding_number(const PlanarPath& path, Complex about) {
    if (!path.closed()) throw StructuralError("winding number needs a closed path");
    const double total = total_arg_increment(sample_path(path, 1024), about);
    return int(std::lround(total / (2 * std::numbers::pi)));
}

MutationPairReport is_valid_mutation_pair(const PlanarPath& c, const PlanarPath& c_prime,
                                          const GeometryContext& ctx) {
    MutationPairReport rep;

    // Orient c' to share both endpoints with c if a flip makes that so.
    PlanarPath cp = c_prime;
    const bool direct = std::abs(c.start() - cp.start()) <= ctx.tol &&
                        std::abs(c.end() - cp.end()) <= ctx.tol;
    const bool swapped = std::abs(c.start() - cp.end()) <= ctx.tol &&
                         std::abs(c.end() - cp.start()) <= ctx.tol;
    if (!direct && swapped) cp = cp.reversed();
    if (!direct && !swapped) rep.violations.push_back("endpoints do not match");

    // Glued loop: c followed by the reversal of c'.
    std::vector<Complex> loop = sample_path(c, 1024);
    const std::vector<Complex> back = sample_path(cp.reversed(), 1024);
    loop.insert(loop.end(), back.begin(), back.end());
    loop.push_back(loop.front());
    const double total = total_arg_increment(loop, Complex(0, 0));
    rep.winding = int(std::lround(total / (2 * std::numbers::pi)));
    if (std::abs(rep.winding) != 1) rep.violations.push_back("glued curve is not a simple loop around 0");

    // Tangent agreement at both splices of the glued curve.
    if (direct || swapped) {
        const Complex t1 = c.end_tangent(), t2 = -cp.end_tangent();
        const Complex t3 = -cp.start_tangent(), t4 = c.start_tangent();
        if (std::abs(t1 - t2) > std::sqrt(ctx.tol) || std::abs(t3 - t4) > std::sqrt(ctx.tol))
            rep.violations.push_back("tangents disagree at splice");
    }

    // With cp parallel to c, the return leg of the glued loop is reverse(cp),
    // so the balancing condition reads integral(c) = -integral(cp).
    rep.area_defect = integrate_lambda_n(c, ctx) + integrate_lambda_n(cp, ctx);
    if (std::abs(rep.area_defect) >= ctx.tol) rep.violations.push_back("integrals differ");

    rep.ok = rep.violations.empty();
    return rep;
}

bool hamiltonian_isotopy_test(const PlanarPath& g0, const PlanarPath& g1,
                              const GeometryContext& ctx) {
    if (std::abs(g0.start() - g1.start()) > ctx.tol || std::abs(g0.end() - g1.end()) > ctx.tol)
        return false;
    if (std::abs(g0.start_tangent() - g1.start_tangent()) > std::sqrt(ctx.tol) ||
        std::abs(g0.end_tangent() - g1.end_tangent()) > std::sqrt(ctx.tol))
        return false;
    return std::abs(integrate_lambda_n(g0, ctx) - integrate_lambda_n(g1, ctx)) <= ctx.tol;
}

std::vector<Complex> torus_point_coordinates(const TorusPoint& p, const GeometryContext& ctx) {
    if (std::abs(p.base) < kOriginClearance) throw DomainError("torus point needs nonzero base");
    if (int(p.angles.size()) != ctx.n - 1)
        throw StructuralError("torus point needs n-1 fiber angles");
    const double r = std::pow(std::abs(p.base), 1.0 / ctx.n);
    std::vector<Complex> z(ctx.n);
    Complex tail(1, 0);
    for (int j = 0; j < ctx.n - 1; ++j) {
        z[j] = std::polar(r, p.angles[j]);
        tail *= z[j];
    }
    z[ctx.n - 1] = p.base / tail;  // keeps the product exactly equal to base
    return z;
}

double lagrangian_residual(const PlanarPath& path, double t, const std::vector<double>& angles,
                           double h, const GeometryContext& ctx) {
    const int n = ctx.n;
    auto embed = [&](double u, const std::vector<double>& th) {
        return torus_point_coordinates(TorusPoint{path.point(u), th}, ctx);
    };
    // central-difference tangent frame: one base direction, n-1 fiber directions
    std::vector<std::vector<Complex>> frame;
    {
        const auto plus = embed(t + h, angles);
        const auto minus = embed(t - h, angles);
        std::vector<Complex> v(n);
        for (int i = 0; i < n; ++i) v[i] = (plus[i] - minus[i]) / (2 * h);
        frame.push_back(std::move(v));
    }
    for (int j = 0; j < n - 1; ++j) {
        auto up = angles, down = angles;
        up[j] += h;
        down[j] -= h;
        const auto plus = embed(t, up);
        const auto minus = embed(t, down);
        std::vector<Complex> v(n);
        for (int i = 0; i < n; ++i) v[i] = (plus[i] - minus[i]) / (2 * h);
        frame.push_back(std::move(v));
    }
    // omega_0(v, w) = sum_i Im(conj(v_i) w_i)
    double worst = 0;
    for (std::size_t a = 0; a < frame.size(); ++a)
        for (std::size_t b = a + 1; b < frame.size(); ++b) {
            double om = 0;
            for (int i = 0; i < n; ++i) om += std::imag(std::conj(frame[a][i]) * frame[b][i]);
            worst = std::max(worst, std::abs(om));
        }
    return worst;
}

std::vector<std::pair<double, double>> primitive_along_path(const PlanarPath& path,
                                                            const GeometryContext& ctx,
                                                            int samples_per_segment) {
    if (samples_per_segment < 1) throw DomainError("need at least one sample per segment");
    const std::size_t k = path.segments().size();
    const double per_piece_tol = ctx.tol / double(k * samples_per_segment);
    std::vector<std::pair<double, double>> out;
    out.emplace_back(0.0, 0.0);
    double acc = 0;
    for (std::size_t s = 0; s < k; ++s) {
        const auto& seg = path.segments()[s];
        for (int i = 1; i <= samples_per_segment; ++i) {
            const double a = double(i - 1) / samples_per_segment;
            const double b = double(i) / samples_per_segment;
            acc += adaptive_segment(seg, ctx.n, a, b, per_piece_tol, 0);
            out.emplace_back((double(s) + b) / double(k), acc);
        }
    }
    return out;
}

double elementary_disc_area(int n, double delta_f, int sign, double scale) {
    if (n < 2) throw DomainError("need n >= 2");
    if (scale <= 0) throw DomainError("scale must be positive");
    return scale * (std::numbers::pi / n + (sign >= 0 ? delta_f : -delta_f));
}

}  // namespace mutkit

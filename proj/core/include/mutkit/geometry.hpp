#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mutkit/path.hpp"

namespace mutkit {

struct GeometryContext {
    int n = 2;        // ambient complex dimension
    double tol = 1e-9;

    GeometryContext() = default;
    GeometryContext(int n_, double tol_ = 1e-9);
};

// Fiber-torus point over a nonzero base value: |z_j| all equal, first n-1
// arguments free, last one determined by the product.
struct TorusPoint {
    Complex base;
    std::vector<double> angles;  // n-1 fiber angles
};

struct AdmissibilityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

struct MutationPairReport {
    bool ok = false;
    int winding = 0;
    double area_defect = 0.0;
    std::vector<std::string> violations;
};

// Integral of (x dy - y dx) / (2 (x^2+y^2)^((n-1)/n)) along the path,
// adaptive Gauss-Kronrod to absolute error ctx.tol.
double integrate_lambda_n(const PlanarPath& path, const GeometryContext& ctx);

AdmissibilityReport is_admissible(const PlanarPath& path, double t, double eps,
                                  const GeometryContext& ctx);

int winding_number(const PlanarPath& path, Complex about);

MutationPairReport is_valid_mutation_pair(const PlanarPath& c, const PlanarPath& c_prime,
                                          const GeometryContext& ctx);

bool hamiltonian_isotopy_test(const PlanarPath& g0, const PlanarPath& g1,
                              const GeometryContext& ctx);

std::vector<Complex> torus_point_coordinates(const TorusPoint& p, const GeometryContext& ctx);

// Max symplectic pairing over a finite-difference tangent frame of the torus
// segment above `path` at parameter t; O(h^2) for a genuinely Lagrangian sheet.
double lagrangian_residual(const PlanarPath& path, double t, const std::vector<double>& angles,
                           double h, const GeometryContext& ctx);

// Cumulative integral values f(u) at samples along the path (u is the global
// parameter in [0,1]); always includes segment breakpoints.
std::vector<std::pair<double, double>> primitive_along_path(const PlanarPath& path,
                                                            const GeometryContext& ctx,
                                                            int samples_per_segment = 4);

double elementary_disc_area(int n, double delta_f, int sign, double scale);

}  // namespace mutkit

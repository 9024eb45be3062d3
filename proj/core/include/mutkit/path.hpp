#pragma once

#include <complex>
#include <variant>
#include <vector>

namespace mutkit {

using Complex = std::complex<double>;

struct LineSegment {
    Complex from;
    Complex to;
};

/// Circular arc center + radius, swept from theta0 to theta1 (signed sweep;
/// theta1 < theta0 runs clockwise).
struct ArcSegment {
    Complex center;
    double radius = 1.0;
    double theta0 = 0.0;
    double theta1 = 0.0;
};

struct PolylineSegment {
    std::vector<Complex> points;  // at least two
};

using PathSegment = std::variant<LineSegment, ArcSegment, PolylineSegment>;

Complex segment_point(const PathSegment& s, double t);       // t in [0,1]
Complex segment_derivative(const PathSegment& s, double t);  // d/dt
Complex segment_start(const PathSegment& s);
Complex segment_end(const PathSegment& s);
PathSegment segment_reversed(const PathSegment& s);
double segment_length_estimate(const PathSegment& s);

/// Piecewise-parametric curve in C*. Consecutive segments must share
/// endpoints within 1e-12, no point may hit 0, and a closed path must
/// return to its start.
class PlanarPath {
  public:
    PlanarPath() = default;
    PlanarPath(std::vector<PathSegment> segments, bool closed);

    const std::vector<PathSegment>& segments() const { return segments_; }
    bool closed() const { return closed_; }

    Complex start() const;
    Complex end() const;
    /// Unit tangent at the start/end of the whole path.
    Complex start_tangent() const;
    Complex end_tangent() const;

    /// Point at global parameter u in [0,1], segments traversed uniformly.
    Complex point(double u) const;

    PlanarPath reversed() const;
    /// Concatenation; the other path must start where this one ends.
    PlanarPath joined(const PlanarPath& other, bool close) const;

    double length_estimate() const;

    static constexpr double kEndpointTol = 1e-12;

  private:
    std::vector<PathSegment> segments_;
    bool closed_ = false;
};

}  // namespace mutkit

#include "mutkit/path.hpp"

#include <algorithm>
#include <cmath>

#include "mutkit/errors.hpp"

namespace mutkit {

namespace {

Complex polyline_point(const PolylineSegment& p, double t) {
    const std::size_t n = p.points.size() - 1;
    double scaled = t * static_cast<double>(n);
    std::size_t i = std::min(static_cast<std::size_t>(scaled), n - 1);
    double local = scaled - static_cast<double>(i);
    return p.points[i] + local * (p.points[i + 1] - p.points[i]);
}

}  // namespace

Complex segment_point(const PathSegment& s, double t) {
    return std::visit(
        [t](const auto& seg) -> Complex {
            using T = std::decay_t<decltype(seg)>;
            if constexpr (std::is_same_v<T, LineSegment>) {
                return seg.from + t * (seg.to - seg.from);
            } else if constexpr (std::is_same_v<T, ArcSegment>) {
                const double th = seg.theta0 + t * (seg.theta1 - seg.theta0);
                return seg.center + seg.radius * Complex(std::cos(th), std::sin(th));
            } else {
                return polyline_point(seg, t);
            }
        },
        s);
}

Complex segment_derivative(const PathSegment& s, double t) {
    return std::visit(
        [t](const auto& seg) -> Complex {
            using T = std::decay_t<decltype(seg)>;
            if constexpr (std::is_same_v<T, LineSegment>) {
                return seg.to - seg.from;
            } else if constexpr (std::is_same_v<T, ArcSegment>) {
                const double sweep = seg.theta1 - seg.theta0;
                const double th = seg.theta0 + t * sweep;
                return seg.radius * sweep * Complex(-std::sin(th), std::cos(th));
            } else {
                const std::size_t n = seg.points.size() - 1;
                double scaled = t * static_cast<double>(n);
                std::size_t i = std::min(static_cast<std::size_t>(scaled), n - 1);
                return static_cast<double>(n) * (seg.points[i + 1] - seg.points[i]);
            }
        },
        s);
}

Complex segment_start(const PathSegment& s) { return segment_point(s, 0.0); }
Complex segment_end(const PathSegment& s) { return segment_point(s, 1.0); }

PathSegment segment_reversed(const PathSegment& s) {
    return std::visit(
        [](const auto& seg) -> PathSegment {
            using T = std::decay_t<decltype(seg)>;
            if constexpr (std::is_same_v<T, LineSegment>) {
                return LineSegment{seg.to, seg.from};
            } else if constexpr (std::is_same_v<T, ArcSegment>) {
                return ArcSegment{seg.center, seg.radius, seg.theta1, seg.theta0};
            } else {
                PolylineSegment r = seg;
                std::reverse(r.points.begin(), r.points.end());
                return r;
            }
        },
        s);
}

double segment_length_estimate(const PathSegment& s) {
    return std::visit(
        [](const auto& seg) -> double {
            using T = std::decay_t<decltype(seg)>;
            if constexpr (std::is_same_v<T, LineSegment>) {
                return std::abs(seg.to - seg.from);
            } else if constexpr (std::is_same_v<T, ArcSegment>) {
                return seg.radius * std::abs(seg.theta1 - seg.theta0);
            } else {
                double l = 0;
                for (std::size_t i = 0; i + 1 < seg.points.size(); ++i)
                    l += std::abs(seg.points[i + 1] - seg.points[i]);
                return l;
            }
        },
        s);
}

PlanarPath::PlanarPath(std::vector<PathSegment> segments, bool closed)
    : segments_(std::move(segments)), closed_(closed) {
    if (segments_.empty()) throw StructuralError("path has no segments");
    for (const auto& s : segments_) {
        if (const auto* p = std::get_if<PolylineSegment>(&s)) {
            if (p->points.size() < 2)
                throw StructuralError("polyline segment needs at least two points");
        }
    }
    for (std::size_t i = 0; i + 1 < segments_.size(); ++i) {
        if (std::abs(segment_end(segments_[i]) - segment_start(segments_[i + 1])) > kEndpointTol)
            throw StructuralError("consecutive path segments do not share endpoints");
    }
    if (closed_ && std::abs(end() - start()) > kEndpointTol)
        throw StructuralError("closed path does not return to its start");
}

Complex PlanarPath::start() const { return segment_start(segments_.front()); }
Complex PlanarPath::end() const { return segment_end(segments_.back()); }

Complex PlanarPath::start_tangent() const {
    Complex d = segment_derivative(segments_.front(), 0.0);
    const double m = std::abs(d);
    return m > 0 ? d / m : d;
}

Complex PlanarPath::end_tangent() const {
    Complex d = segment_derivative(segments_.back(), 1.0);
    const double m = std::abs(d);
    return m > 0 ? d / m : d;
}

Complex PlanarPath::point(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    const double scaled = u * static_cast<double>(segments_.size());
    std::size_t i = std::min(static_cast<std::size_t>(scaled), segments_.size() - 1);
    return segment_point(segments_[i], scaled - static_cast<double>(i));
}

PlanarPath PlanarPath::reversed() const {
    std::vector<PathSegment> rev;
    rev.reserve(segments_.size());
    for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
        rev.push_back(segment_reversed(*it));
    return PlanarPath(std::move(rev), closed_);
}

PlanarPath PlanarPath::joined(const PlanarPath& other, bool close) const {
    std::vector<PathSegment> all = segments_;
    all.insert(all.end(), other.segments_.begin(), other.segments_.end());
    return PlanarPath(std::move(all), close);
}

double PlanarPath::length_estimate() const {
    double l = 0;
    for (const auto& s : segments_) l += segment_length_estimate(s);
    return l;
}

}  // namespace mutkit

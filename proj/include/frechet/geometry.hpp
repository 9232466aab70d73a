#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace frechet {

// A point in d-dimensional space, d >= 1. Both curves of a query share d.
struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> cs) : coords(cs) {}
    explicit Point(std::vector<double> cs) : coords(std::move(cs)) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }
    bool operator==(const Point& o) const { return coords == o.coords; }
};

double squared_distance(const Point& p, const Point& q);
double distance(const Point& p, const Point& q);

// Straight line segment; zero length (start == end) is allowed.
struct Segment {
    Point start, end;

    // (1-t)*start + t*end
    Point at(double t) const;
};

// Closed subinterval of [0,1]; lo > hi encodes the empty interval.
struct ParamInterval {
    double lo = 1.0;
    double hi = 0.0;

    static ParamInterval full() { return {0.0, 1.0}; }

    bool empty() const { return lo > hi; }
    bool contains(double x) const { return !empty() && x >= lo && x <= hi; }
    bool covers_zero() const { return !empty() && lo <= 0.0; }
    bool covers_one() const { return !empty() && hi >= 1.0; }
};

ParamInterval intersect(const ParamInterval& a, const ParamInterval& b);

// Part of `iv` at or above `cut`.
ParamInterval clip_low(const ParamInterval& iv, double cut);

bool subset_of(const ParamInterval& inner, const ParamInterval& outer, double tol = 1e-9);

// {t in [0,1] : |seg(t) - q| <= eps}. The squared distance is quadratic in t,
// so the result is a single closed interval (possibly empty). A zero-length
// segment degenerates to a point test.
ParamInterval point_segment_free_interval(const Segment& seg, const Point& q, double eps);

// Free-space cell spanned by one (possibly shortcut) edge of each curve,
// with the free intervals of its four boundary sides. The free region
// {(lambda, mu) : |h_edge(lambda) - v_edge(mu)| <= eps} is convex.
struct CellGeometry {
    Segment h_edge, v_edge;
    double eps = 0.0;
    ParamInterval left, right, bottom, top;
};

CellGeometry cell_geometry(const Segment& h_edge, const Segment& v_edge, double eps);

// Monotone reachability across one convex cell. The entry set is left_in on
// the left side, bottom_in on the bottom side, and the lower-left corner when
// corner_seed is set. Returns the reachable parts of the right and top sides:
// the right side clipped from below by the minimum entry mu, the top side by
// the minimum entry lambda. Preconditions: left_in inside cell.left, bottom_in
// inside cell.bottom, and a seeded corner must lie in the free region.
std::pair<ParamInterval, ParamInterval> propagate_cell(const CellGeometry& cell,
                                                       const ParamInterval& left_in,
                                                       const ParamInterval& bottom_in,
                                                       bool corner_seed);

// Smallest eps at which point_segment_free_interval(seg, q, eps) opens,
// i.e. the distance from q to the segment.
double vertex_edge_critical(const Point& q, const Segment& seg);

// Candidate eps for a monotonicity event: |q1 - c| where c is the point on
// seg's supporting line equidistant from q1 and q2, clamped to the segment.
// Degenerate configurations (q1 == q2, bisector parallel to or containing the
// line) fall back to vertex/endpoint distances so that the candidate set
// stays a superset of the true event values; returns nothing only when the
// bisector misses the line entirely.
std::optional<double> monotonicity_critical(const Point& q1, const Point& q2, const Segment& seg);

}  // namespace frechet

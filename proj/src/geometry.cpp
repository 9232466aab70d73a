#include "frechet/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "frechet/errors.hpp"

namespace frechet {

namespace {

void check_same_dim(std::size_t a, std::size_t b) {
    if (a != b) throw InputError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

double squared_distance(const Point& p, const Point& q) {
    check_same_dim(p.dim(), q.dim());
    double s = 0.0;
    for (std::size_t i = 0; i < p.dim(); ++i) {
        const double d = p[i] - q[i];
        s += d * d;
    }
    return s;
}

double distance(const Point& p, const Point& q) { return std::sqrt(squared_distance(p, q)); }

Point Segment::at(double t) const {
    Point r = start;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] = (1.0 - t) * start[i] + t * end[i];
    return r;
}

ParamInterval intersect(const ParamInterval& a, const ParamInterval& b) {
    if (a.empty() || b.empty()) return {};
    ParamInterval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (r.empty()) return {};
    return r;
}

ParamInterval clip_low(const ParamInterval& iv, double cut) {
    if (iv.empty()) return {};
    ParamInterval r{std::max(iv.lo, cut), iv.hi};
    if (r.empty()) return {};
    return r;
}

bool subset_of(const ParamInterval& inner, const ParamInterval& outer, double tol) {
    if (inner.empty()) return true;
    if (outer.empty()) return false;
    return inner.lo >= outer.lo - tol && inner.hi <= outer.hi + tol;
}

ParamInterval point_segment_free_interval(const Segment& seg, const Point& q, double eps) {
    check_same_dim(seg.start.dim(), seg.end.dim());
    check_same_dim(seg.start.dim(), q.dim());
    if (eps < 0.0) throw InputError("eps must be non-negative");

    // |A + t*d - q|^2 <= eps^2 with d = end - start, solved on squared values.
    double a = 0.0, b = 0.0, c = -eps * eps;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const double di = seg.end[i] - seg.start[i];
        const double wi = seg.start[i] - q[i];
        a += di * di;
        b += 2.0 * di * wi;
        c += wi * wi;
    }
    if (a == 0.0) {
        // Degenerate segment: constant point.
        return c <= 0.0 ? ParamInterval::full() : ParamInterval{};
    }
    // Decide emptiness at the clamped foot point with the same arithmetic as
    // vertex_edge_critical, so the interval opens exactly when eps passes the
    // opening event. The quadratic roots near tangency lose half the digits,
    // which would otherwise make the two disagree.
    const double t_foot = std::clamp(-b / (2.0 * a), 0.0, 1.0);
    if (squared_distance(seg.at(t_foot), q) > eps * eps) return {};
    const double disc = b * b - 4.0 * a * c;
    const double s = disc > 0.0 ? std::sqrt(disc) : 0.0;
    const double lo = std::min(std::max((-b - s) / (2.0 * a), 0.0), t_foot);
    const double hi = std::max(std::min((-b + s) / (2.0 * a), 1.0), t_foot);
    return {lo, hi};
}

CellGeometry cell_geometry(const Segment& h_edge, const Segment& v_edge, double eps) {
    CellGeometry cell;
    cell.h_edge = h_edge;
    cell.v_edge = v_edge;
    cell.eps = eps;
    cell.left = point_segment_free_interval(v_edge, h_edge.start, eps);
    cell.right = point_segment_free_interval(v_edge, h_edge.end, eps);
    cell.bottom = point_segment_free_interval(h_edge, v_edge.start, eps);
    cell.top = point_segment_free_interval(h_edge, v_edge.end, eps);
    return cell;
}

std::pair<ParamInterval, ParamInterval> propagate_cell(const CellGeometry& cell,
                                                       const ParamInterval& left_in,
                                                       const ParamInterval& bottom_in,
                                                       bool corner_seed) {
    assert(subset_of(left_in, cell.left));
    assert(subset_of(bottom_in, cell.bottom));
    assert(!corner_seed || (cell.left.covers_zero() && cell.bottom.covers_zero()));

    const bool any_left = corner_seed || !left_in.empty();
    const bool any_bottom = corner_seed || !bottom_in.empty();
    if (!any_left && !any_bottom) return {ParamInterval{}, ParamInterval{}};

    // Convexity of the free region makes the minimum entry coordinate the
    // only thing that matters for each exit side.
    const double min_mu = (corner_seed || !bottom_in.empty()) ? 0.0 : left_in.lo;
    const double min_lambda = (corner_seed || !left_in.empty()) ? 0.0 : bottom_in.lo;

    ParamInterval right_out = any_left || !bottom_in.empty() ? clip_low(cell.right, min_mu) : ParamInterval{};
    ParamInterval top_out = any_bottom || !left_in.empty() ? clip_low(cell.top, min_lambda) : ParamInterval{};
    return {right_out, top_out};
}

double vertex_edge_critical(const Point& q, const Segment& seg) {
    check_same_dim(seg.start.dim(), q.dim());
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < q.dim(); ++i) {
        const double di = seg.end[i] - seg.start[i];
        const double wi = q[i] - seg.start[i];
        a += di * di;
        b += di * wi;
    }
    const double t = a == 0.0 ? 0.0 : std::clamp(b / a, 0.0, 1.0);
    return distance(q, seg.at(t));
}

std::optional<double> monotonicity_critical(const Point& q1, const Point& q2, const Segment& seg) {
    check_same_dim(q1.dim(), q2.dim());
    check_same_dim(q1.dim(), seg.start.dim());

    // Solve |A + u*d - q1|^2 == |A + u*d - q2|^2 for u on the supporting line.
    double dw = 0.0, rhs = 0.0, w2 = 0.0;
    for (std::size_t i = 0; i < q1.dim(); ++i) {
        const double di = seg.end[i] - seg.start[i];
        const double wi = q2[i] - q1[i];
        const double mi = 0.5 * (q1[i] + q2[i]) - seg.start[i];
        dw += di * wi;
        rhs += wi * mi;
        w2 += wi * wi;
    }
    if (w2 == 0.0) {
        // q1 == q2: every point equidistant; fall back to the opening event.
        return vertex_edge_critical(q1, seg);
    }
    if (dw == 0.0) {
        // Bisector parallel to the supporting line. If it contains the line
        // (the start point is equidistant), every point of the line is an
        // intersection; use the nearer segment endpoint. Otherwise no event.
        const double gap = squared_distance(q1, seg.start) - squared_distance(q2, seg.start);
        const double scale = std::max({1.0, squared_distance(q1, seg.start), squared_distance(q2, seg.start)});
        if (std::abs(gap) <= 1e-12 * scale) {
            return std::min(distance(q1, seg.start), distance(q1, seg.end));
        }
        return std::nullopt;
    }
    const double u = std::clamp(rhs / dw, 0.0, 1.0);
    return distance(q1, seg.at(u));
}

}  // namespace frechet

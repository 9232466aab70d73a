#include "frechet/classic.hpp"

#include <vector>

#include "frechet/critical_values.hpp"
#include "frechet/errors.hpp"
#include "frechet/geometry.hpp"

namespace frechet {

bool decide_classic(const Curve& x, const Curve& y, double eps) {
    if (x.dim() != y.dim()) throw InputError("curves must share one dimension");
    if (eps < 0.0) throw InputError("eps must be non-negative");
    const int n = x.edges();
    const int m = y.edges();
    const double eps2 = eps * eps;

    if (squared_distance(x.vertex(0), y.vertex(0)) > eps2) return false;
    if (squared_distance(x.vertex(n), y.vertex(m)) > eps2) return false;

    // reach_h[i]: reachable part of horizontal edge i on the current row line.
    // Row 0 is reachable only by walking right from the origin.
    std::vector<ParamInterval> reach_h(static_cast<std::size_t>(n));
    bool connected = true;
    for (int i = 0; i < n; ++i) {
        const ParamInterval f = point_segment_free_interval(x.shortcut(i, i + 1), y.vertex(0), eps);
        if (connected && f.covers_zero()) {
            reach_h[static_cast<std::size_t>(i)] = {0.0, f.hi};
            connected = f.covers_one();
        } else {
            connected = false;
        }
    }

    bool left_connected = true;
    ParamInterval right_out, top_out;
    for (int j = 0; j < m; ++j) {
        const Segment y_edge = y.shortcut(j, j + 1);
        // Reachable part of the left diagram boundary for this row.
        ParamInterval carry_v;
        const ParamInterval f_left = point_segment_free_interval(y_edge, x.vertex(0), eps);
        if (left_connected && f_left.covers_zero()) {
            carry_v = {0.0, f_left.hi};
            left_connected = f_left.covers_one();
        } else {
            left_connected = false;
        }
        for (int i = 0; i < n; ++i) {
            const CellGeometry cell = cell_geometry(x.shortcut(i, i + 1), y_edge, eps);
            std::tie(right_out, top_out) =
                propagate_cell(cell, carry_v, reach_h[static_cast<std::size_t>(i)], false);
            carry_v = right_out;
            reach_h[static_cast<std::size_t>(i)] = top_out;
        }
    }
    return right_out.covers_one() || top_out.covers_one();
}

double compute_classic(const Curve& x, const Curve& y) {
    OutlierSpec spec;
    spec.k = 0;
    spec.mode = Mode::Classic;
    const std::vector<CriticalValue> candidates = enumerate_criticals(x, y, spec);
    // The distance itself is one of the candidates, so the last one accepts.
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (decide_classic(x, y, candidates[mid].value))
            hi = mid;
        else
            lo = mid + 1;
    }
    return candidates[lo].value;
}

}  // namespace frechet

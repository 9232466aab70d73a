#include "frechet/oracle.hpp"

#include <algorithm>
#include <limits>

#include "frechet/classic.hpp"
#include "frechet/errors.hpp"

namespace frechet {

namespace {

constexpr int kMaxVertices = 10;
constexpr int kMaxBudget = 3;

void check_guard(const Curve& x, const Curve& y, const OutlierSpec& spec) {
    if (!brute_feasible(x, y, spec))
        throw GuardError("instance too large for exhaustive enumeration (max " +
                         std::to_string(kMaxVertices) + " vertices per curve, k <= " +
                         std::to_string(kMaxBudget) + ")");
}

// Shortcut curves: subsequences that keep both endpoints, where every gap of
// two or more counts as one shortcut.
void enumerate_shortcut_curves(const Curve& c, int max_shortcuts, const std::function<void(const Curve&)>& fn) {
    const int n = c.edges();
    Curve current;
    current.id = c.id;
    current.vertices.push_back(c.vertex(0));
    std::function<void(int, int)> rec = [&](int last, int used) {
        if (last == n) {
            fn(current);
            return;
        }
        for (int next = last + 1; next <= n; ++next) {
            const int cost = next - last >= 2 ? 1 : 0;
            if (used + cost > max_shortcuts) continue;
            current.vertices.push_back(c.vertex(next));
            rec(next, used + cost);
            current.vertices.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace

bool brute_feasible(const Curve& x, const Curve& y, const OutlierSpec& spec) {
    return x.vertices.size() <= kMaxVertices && y.vertices.size() <= kMaxVertices && spec.k <= kMaxBudget;
}

bool brute_decide(const Curve& x, const Curve& y, const OutlierSpec& spec, double eps) {
    validate_spec(spec);
    check_guard(x, y, spec);
    switch (spec.mode) {
        case Mode::Classic:
            return decide_classic(x, y, eps);
        case Mode::UndirectedOutlier: {
            bool found = false;
            enumerate_subsequence_curves(x, spec.k, [&](const Curve& xs, const std::vector<int>& dx) {
                if (found) return;
                enumerate_subsequence_curves(
                    y, spec.k - static_cast<int>(dx.size()), [&](const Curve& ys, const std::vector<int>&) {
                        if (!found && decide_classic(xs, ys, eps)) found = true;
                    });
            });
            return found;
        }
        case Mode::DirectedOutlier: {
            const Curve& fixed = spec.target == TargetCurve::Second ? x : y;
            const Curve& loose = spec.target == TargetCurve::Second ? y : x;
            bool found = false;
            enumerate_subsequence_curves(loose, spec.k, [&](const Curve& ls, const std::vector<int>&) {
                if (!found && decide_classic(fixed, ls, eps)) found = true;
            });
            return found;
        }
        case Mode::ShortcutDirected: {
            const Curve& cut = spec.target == TargetCurve::First ? x : y;
            const Curve& fixed = spec.target == TargetCurve::First ? y : x;
            bool found = false;
            enumerate_shortcut_curves(cut, spec.k, [&](const Curve& cs) {
                if (found) return;
                const bool ok = spec.target == TargetCurve::First ? decide_classic(cs, fixed, eps)
                                                                  : decide_classic(fixed, cs, eps);
                if (ok) found = true;
            });
            return found;
        }
    }
    return false;
}

double brute_compute(const Curve& x, const Curve& y, const OutlierSpec& spec) {
    validate_spec(spec);
    check_guard(x, y, spec);
    double best = std::numeric_limits<double>::infinity();
    switch (spec.mode) {
        case Mode::Classic:
            return compute_classic(x, y);
        case Mode::UndirectedOutlier:
            enumerate_subsequence_curves(x, spec.k, [&](const Curve& xs, const std::vector<int>& dx) {
                enumerate_subsequence_curves(
                    y, spec.k - static_cast<int>(dx.size()), [&](const Curve& ys, const std::vector<int>&) {
                        best = std::min(best, compute_classic(xs, ys));
                    });
            });
            return best;
        case Mode::DirectedOutlier: {
            const Curve& fixed = spec.target == TargetCurve::Second ? x : y;
            const Curve& loose = spec.target == TargetCurve::Second ? y : x;
            enumerate_subsequence_curves(loose, spec.k, [&](const Curve& ls, const std::vector<int>&) {
                best = std::min(best, spec.target == TargetCurve::Second ? compute_classic(fixed, ls)
                                                                         : compute_classic(ls, fixed));
            });
            return best;
        }
        case Mode::ShortcutDirected: {
            const Curve& cut = spec.target == TargetCurve::First ? x : y;
            const Curve& fixed = spec.target == TargetCurve::First ? y : x;
            enumerate_shortcut_curves(cut, spec.k, [&](const Curve& cs) {
                best = std::min(best, spec.target == TargetCurve::First ? compute_classic(cs, fixed)
                                                                        : compute_classic(fixed, cs));
            });
            return best;
        }
    }
    return best;
}

}  // namespace frechet

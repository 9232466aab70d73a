#pragma once

// Shared helpers for the test suites: seeded instance generation, eps value
// selection across the critical range, and a discrete Fréchet upper-bound
// oracle that stays independent of the library's decision path.

#include <algorithm>
#include <random>
#include <vector>

#include "frechet/classic.hpp"
#include "frechet/critical_values.hpp"
#include "frechet/curve.hpp"

namespace testsupport {

using namespace frechet;

inline Curve random_curve(std::mt19937_64& rng, int vertices, int dim = 2, double span = 1.0) {
    std::uniform_real_distribution<double> uni(0.0, span);
    Curve c;
    for (int v = 0; v < vertices; ++v) {
        Point p;
        for (int d = 0; d < dim; ++d) p.coords.push_back(uni(rng));
        c.vertices.push_back(std::move(p));
    }
    return c;
}

// Eps values spanning the instance's critical range, probing strictly
// between consecutive candidates (decisions are constant there, so the two
// engines are compared away from ulp-level ties at the events themselves).
inline std::vector<double> critical_range_eps(const Curve& x, const Curve& y, const OutlierSpec& spec,
                                              int count = 5) {
    const auto cands = enumerate_criticals(x, y, spec);
    std::vector<double> eps;
    if (cands.empty()) return eps;
    const double vmin = cands.front().value;
    const double vmax = cands.back().value;
    eps.push_back(vmin > 0.0 ? 0.5 * vmin : 0.0);
    for (int q = 1; q + 1 < count; ++q) {
        const std::size_t idx =
            static_cast<std::size_t>(q) * (cands.size() - 1) / static_cast<std::size_t>(count - 1);
        const std::size_t nxt = std::min(idx + 1, cands.size() - 1);
        eps.push_back(0.5 * (cands[idx].value + cands[nxt].value));
    }
    eps.push_back(vmax * 1.001 + 1e-9);
    eps.resize(std::min<std::size_t>(eps.size(), static_cast<std::size_t>(count)));
    return eps;
}

// Standard discrete Fréchet distance over the vertex sequences; an upper
// bound for the continuous distance.
inline double discrete_frechet(const Curve& x, const Curve& y) {
    const std::size_t n = x.vertices.size();
    const std::size_t m = y.vertices.size();
    std::vector<std::vector<double>> dp(n, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double d = distance(x.vertices[i], y.vertices[j]);
            if (i == 0 && j == 0)
                dp[i][j] = d;
            else if (i == 0)
                dp[i][j] = std::max(dp[i][j - 1], d);
            else if (j == 0)
                dp[i][j] = std::max(dp[i - 1][j], d);
            else
                dp[i][j] = std::max(std::min({dp[i - 1][j], dp[i][j - 1], dp[i - 1][j - 1]}), d);
        }
    }
    return dp[n - 1][m - 1];
}

inline Curve spike_x() { return Curve{{Point{0.0, 0.0}, Point{2.0, 0.0}}, "spike-x"}; }
inline Curve spike_y() { return Curve{{Point{0.0, 0.0}, Point{1.0, 1.0}, Point{2.0, 0.0}}, "spike-y"}; }

}  // namespace testsupport

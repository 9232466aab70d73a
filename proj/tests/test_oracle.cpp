#include <doctest.h>

#include <random>

#include "frechet/classic.hpp"
#include "frechet/errors.hpp"
#include "frechet/oracle.hpp"
#include "support.hpp"

using namespace frechet;
using namespace testsupport;

namespace {
OutlierSpec undirected(int k) {
    OutlierSpec s;
    s.k = k;
    s.mode = Mode::UndirectedOutlier;
    return s;
}
}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("the guard rejects oversized instances") {
    std::mt19937_64 rng(1);
    const Curve big = random_curve(rng, 11);
    const Curve small = random_curve(rng, 3);
    CHECK_THROWS_AS(brute_decide(big, small, undirected(1), 0.5), GuardError);
    CHECK(!brute_feasible(big, small, undirected(1)));
}

TEST_CASE("classic mode equals decide_classic") {
    std::mt19937_64 rng(2);
    OutlierSpec spec;
    spec.mode = Mode::Classic;
    for (int trial = 0; trial < 40; ++trial) {
        const Curve x = random_curve(rng, 2 + static_cast<int>(rng() % 5));
        const Curve y = random_curve(rng, 2 + static_cast<int>(rng() % 5));
        const double eps = 0.1 + 0.4 * static_cast<double>(trial % 5);
        CHECK(brute_decide(x, y, spec, eps) == decide_classic(x, y, eps));
    }
}

TEST_CASE("spike example") {
    CHECK(brute_decide(spike_x(), spike_y(), undirected(1), 0.0));
    CHECK(brute_compute(spike_x(), spike_y(), undirected(1)) == doctest::Approx(0.0));
    CHECK(brute_compute(spike_x(), spike_y(), undirected(2)) == doctest::Approx(0.0));
    OutlierSpec classic;
    classic.mode = Mode::Classic;
    CHECK(brute_compute(spike_x(), spike_y(), classic) == doctest::Approx(1.0));
}

TEST_CASE("undirected value is symmetric and non-increasing in k") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const Curve x = random_curve(rng, 4 + static_cast<int>(rng() % 2));
        const Curve y = random_curve(rng, 4 + static_cast<int>(rng() % 2));
        const double k1 = brute_compute(x, y, undirected(1));
        const double k2 = brute_compute(x, y, undirected(2));
        CHECK(k2 <= k1 + 1e-12);
        CHECK(brute_compute(y, x, undirected(1)) == doctest::Approx(k1).epsilon(1e-12));
    }
}

TEST_CASE("shortcut enumeration counts gaps, not vertices") {
    // One shortcut over two skipped vertices is feasible at k = 1.
    const Curve x{{Point{0, 0}, Point{1, 5}, Point{2, -5}, Point{3, 0}}, ""};
    const Curve y{{Point{0, 0}, Point{3, 0}}, ""};
    OutlierSpec spec;
    spec.mode = Mode::ShortcutDirected;
    spec.k = 1;
    spec.target = TargetCurve::First;
    CHECK(brute_decide(x, y, spec, 1e-9));
    // Dropping the two spikes with vertex-counted outliers needs k = 2.
    CHECK(!brute_decide(x, y, undirected(1), 1e-9));
    CHECK(brute_decide(x, y, undirected(2), 1e-9));
}

}  // TEST_SUITE

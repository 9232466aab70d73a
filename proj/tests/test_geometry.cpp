#include <doctest.h>

#include <cmath>
#include <random>

#include "frechet/errors.hpp"
#include "frechet/geometry.hpp"

using namespace frechet;

namespace {
Segment seg(double x0, double y0, double x1, double y1) {
    return Segment{Point{x0, y0}, Point{x1, y1}};
}
}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("free interval of a point against a segment") {
    SUBCASE("tangency collapses to a single parameter") {
        const ParamInterval iv = point_segment_free_interval(seg(0, 0, 2, 0), Point{1, 1}, 1.0);
        REQUIRE(!iv.empty());
        CHECK(iv.lo == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(iv.hi == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("out of reach is empty") {
        CHECK(point_segment_free_interval(seg(0, 0, 2, 0), Point{1, 2}, 1.0).empty());
    }
    SUBCASE("clamped to the unit interval") {
        const ParamInterval iv = point_segment_free_interval(seg(0, 0, 2, 0), Point{0, 0}, 1.0);
        REQUIRE(!iv.empty());
        CHECK(iv.lo == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(iv.hi == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("zero-length segment acts as a point") {
        CHECK(point_segment_free_interval(seg(1, 1, 1, 1), Point{1, 1.5}, 1.0).covers_one());
        CHECK(point_segment_free_interval(seg(1, 1, 1, 1), Point{1, 3}, 1.0).empty());
    }
    SUBCASE("dimension mismatch rejected") {
        CHECK_THROWS_AS(point_segment_free_interval(seg(0, 0, 1, 0), Point{0, 0, 0}, 1.0), InputError);
    }
}

TEST_CASE("cell boundary intervals") {
    SUBCASE("identical edges at eps zero leave the diagonal corners") {
        const CellGeometry c = cell_geometry(seg(0, 0, 1, 0), seg(0, 0, 1, 0), 0.0);
        CHECK(c.left.lo == doctest::Approx(0.0));
        CHECK(c.left.hi == doctest::Approx(0.0));
        CHECK(c.right.lo == doctest::Approx(1.0));
        CHECK(c.right.hi == doctest::Approx(1.0));
        CHECK(c.bottom.lo == doctest::Approx(0.0));
        CHECK(c.bottom.hi == doctest::Approx(0.0));
        CHECK(c.top.lo == doctest::Approx(1.0));
        CHECK(c.top.hi == doctest::Approx(1.0));
    }
    SUBCASE("parallel edges at distance one stay blocked below eps one") {
        const CellGeometry c = cell_geometry(seg(0, 0, 1, 0), seg(0, 1, 1, 1), 0.5);
        CHECK(c.left.empty());
        CHECK(c.right.empty());
        CHECK(c.bottom.empty());
        CHECK(c.top.empty());
    }
    SUBCASE("boundary intervals agree with dense sampling") {
        // Includes the configuration hEdge (0,0)->(2,0) against vEdge
        // (1,1)->(1,-1) at eps 1, whose bottom side grazes at one parameter.
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> uni(-2.0, 2.0);
        auto check_side = [&](const Segment& edge, const Point& q, double eps, const ParamInterval& got) {
            constexpr int kSteps = 4000;
            double lo = 2.0, hi = -1.0;
            for (int c = 0; c <= kSteps; ++c) {
                const double t = static_cast<double>(c) / kSteps;
                if (distance(edge.at(t), q) <= eps + 1e-12) {
                    lo = std::min(lo, t);
                    hi = std::max(hi, t);
                }
            }
            if (hi < lo) {
                CHECK(got.empty());
            } else {
                REQUIRE(!got.empty());
                CHECK(got.lo == doctest::Approx(lo).epsilon(1e-3));
                CHECK(got.hi == doctest::Approx(hi).epsilon(1e-3));
            }
        };
        const CellGeometry pinch = cell_geometry(seg(0, 0, 2, 0), seg(1, 1, 1, -1), 1.0);
        check_side(pinch.h_edge, pinch.v_edge.start, 1.0, pinch.bottom);
        check_side(pinch.h_edge, pinch.v_edge.end, 1.0, pinch.top);
        for (int trial = 0; trial < 50; ++trial) {
            const Segment h = seg(uni(rng), uni(rng), uni(rng), uni(rng));
            const Segment v = seg(uni(rng), uni(rng), uni(rng), uni(rng));
            const double eps = std::abs(uni(rng));
            const CellGeometry c = cell_geometry(h, v, eps);
            check_side(h, v.start, eps, c.bottom);
            check_side(h, v.end, eps, c.top);
            check_side(v, h.start, eps, c.left);
            check_side(v, h.end, eps, c.right);
        }
    }
}

TEST_CASE("monotone propagation through one cell") {
    const CellGeometry open_cell = cell_geometry(seg(0, 0, 1, 0), seg(0, 0, 1, 0), 10.0);
    SUBCASE("no entry, no exit") {
        const auto [right, top] = propagate_cell(open_cell, {}, {}, false);
        CHECK(right.empty());
        CHECK(top.empty());
    }
    SUBCASE("a bottom entry reaches the full right side") {
        const auto [right, top] = propagate_cell(open_cell, {}, ParamInterval{0.0, 1.0}, false);
        CHECK(right.lo == doctest::Approx(0.0));
        CHECK(right.hi == doctest::Approx(1.0));
        CHECK(top.lo == doctest::Approx(0.0));
        CHECK(top.hi == doctest::Approx(1.0));
    }
    SUBCASE("a left entry clips the right side from below") {
        const auto [right, top] = propagate_cell(open_cell, ParamInterval{0.4, 0.6}, {}, false);
        CHECK(right.lo == doctest::Approx(0.4));
        CHECK(right.hi == doctest::Approx(1.0));
        CHECK(top.lo == doctest::Approx(0.0));
        CHECK(top.hi == doctest::Approx(1.0));
    }
    SUBCASE("outputs stay inside the cell sides and grow with the inputs") {
        std::mt19937_64 rng(21);
        std::uniform_real_distribution<double> uni(-1.5, 1.5);
        int interesting = 0;
        for (int trial = 0; trial < 400; ++trial) {
            const CellGeometry cell = cell_geometry(seg(uni(rng), uni(rng), uni(rng), uni(rng)),
                                                    seg(uni(rng), uni(rng), uni(rng), uni(rng)),
                                                    std::abs(uni(rng)) + 0.2);
            auto sub = [&](const ParamInterval& side, double a, double b) {
                if (side.empty()) return ParamInterval{};
                ParamInterval r{side.lo + a * (side.hi - side.lo), side.lo + b * (side.hi - side.lo)};
                return r;
            };
            const ParamInterval left_small = sub(cell.left, 0.3, 0.6);
            const ParamInterval left_big = sub(cell.left, 0.1, 0.8);
            const ParamInterval bottom_small = sub(cell.bottom, 0.2, 0.5);
            const ParamInterval bottom_big = sub(cell.bottom, 0.0, 0.9);
            const auto [r1, t1] = propagate_cell(cell, left_small, bottom_small, false);
            const auto [r2, t2] = propagate_cell(cell, left_big, bottom_big, false);
            CHECK(subset_of(r1, cell.right, 1e-12));
            CHECK(subset_of(t1, cell.top, 1e-12));
            CHECK(subset_of(r1, r2, 1e-12));
            CHECK(subset_of(t1, t2, 1e-12));
            if (!r1.empty()) ++interesting;
        }
        CHECK(interesting > 40);
    }
}

TEST_CASE("free region of a random cell is row- and column-convex") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const Segment h = seg(uni(rng), uni(rng), uni(rng), uni(rng));
        const Segment v = seg(uni(rng), uni(rng), uni(rng), uni(rng));
        const double eps = std::abs(uni(rng)) + 0.1;
        constexpr int kGrid = 50;
        for (int r = 0; r <= kGrid; ++r) {
            int flips = 0;
            bool inside = false;
            for (int c = 0; c <= kGrid; ++c) {
                const bool now =
                    distance(h.at(static_cast<double>(c) / kGrid), v.at(static_cast<double>(r) / kGrid)) <= eps;
                if (now != inside) ++flips;
                inside = now;
            }
            CHECK(flips <= 2);
        }
    }
}

TEST_CASE("opening event equals the point-segment distance") {
    CHECK(vertex_edge_critical(Point{1, 1}, seg(0, 0, 2, 0)) == doctest::Approx(1.0));
    CHECK(vertex_edge_critical(Point{3, 0}, seg(0, 0, 2, 0)) == doctest::Approx(1.0));
    CHECK(vertex_edge_critical(Point{0, 0}, seg(0, 0, 1, 1)) == doctest::Approx(0.0));
}

TEST_CASE("free interval opens exactly at the critical eps") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const Segment s = seg(uni(rng), uni(rng), uni(rng), uni(rng));
        const Point q{uni(rng), uni(rng)};
        const double crit = vertex_edge_critical(q, s);
        CHECK(!point_segment_free_interval(s, q, crit * (1.0 + 1e-12) + 1e-15).empty());
        if (crit > 1e-9) CHECK(point_segment_free_interval(s, q, crit * (1.0 - 1e-6)).empty());
        const ParamInterval iv = point_segment_free_interval(s, q, crit + 0.3);
        REQUIRE(!iv.empty());
        for (int c = 0; c <= 100; ++c) {
            const double t = iv.lo + (iv.hi - iv.lo) * c / 100.0;
            CHECK(distance(s.at(t), q) <= crit + 0.3 + 1e-9);
        }
    }
}

TEST_CASE("monotonicity event candidates") {
    SUBCASE("symmetric pair lands on the midpoint") {
        const auto v = monotonicity_critical(Point{0, 1}, Point{2, 1}, seg(0, 0, 2, 0));
        REQUIRE(v.has_value());
        CHECK(*v == doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("coincident points fall back to the opening event") {
        const auto v = monotonicity_critical(Point{0, 1}, Point{0, 1}, seg(0, 0, 2, 0));
        REQUIRE(v.has_value());
        CHECK(*v == doctest::Approx(1.0));
    }
    SUBCASE("bisector along the supporting line uses the nearer endpoint") {
        const auto v = monotonicity_critical(Point{0, 0}, Point{0, 2}, seg(1, 1, 3, 1));
        REQUIRE(v.has_value());
        CHECK(*v == doctest::Approx(std::sqrt(2.0)));
    }
    SUBCASE("parallel bisector off the line yields no candidate") {
        const auto v = monotonicity_critical(Point{0, 0}, Point{0, 2}, seg(0, 3, 2, 3));
        CHECK(!v.has_value());
    }
    SUBCASE("intersection beyond the segment clamps to an endpoint") {
        const auto v = monotonicity_critical(Point{0, 1}, Point{0.2, 1}, seg(5, 0, 6, 0));
        REQUIRE(v.has_value());
        CHECK(*v == doctest::Approx(distance(Point{0, 1}, Point{5, 0})));
    }
}

}  // TEST_SUITE

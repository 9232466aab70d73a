#include <doctest.h>

#include <sstream>

#include "frechet/curve.hpp"
#include "frechet/errors.hpp"

using namespace frechet;

TEST_SUITE("curve") {

TEST_CASE("linear parametrization") {
    const Curve c{{Point{0, 0}, Point{2, 0}, Point{2, 2}}, ""};
    CHECK(c.eval(0.5) == Point{1, 0});
    CHECK(c.eval(0.0) == Point{0, 0});
    CHECK(c.eval(1.5) == Point{2, 1});
    for (int i = 0; i <= c.edges(); ++i) CHECK(c.eval(i) == c.vertices[static_cast<std::size_t>(i)]);
    CHECK_THROWS_AS(c.eval(2.5), InputError);
    CHECK_THROWS_AS(c.eval(-0.1), InputError);
}

TEST_CASE("shortcut length counts skipped vertices") {
    CHECK(shortcut_length(0, 4) == 3);
    CHECK(shortcut_length(2, 2) == 0);
    CHECK(shortcut_length(2, 3) == 0);
    CHECK_THROWS_AS(shortcut_length(3, 2), InputError);
    for (int i = 0; i < 5; ++i)
        for (int a = i + 1; a < 8; ++a) CHECK(shortcut_length(i, a) + 1 == a - i);
}

TEST_CASE("csv parsing") {
    SUBCASE("plain points") {
        std::istringstream in{"0,0\n1,0\n"};
        const Curve c = load_curve(in, CurveFormat::Csv, "mem.csv");
        CHECK(c.vertices.size() == 2);
        CHECK(c.dim() == 2);
    }
    SUBCASE("comments and blank lines are skipped") {
        std::istringstream in{"# header\n0,0\n\n  # more\n1,2.5\n"};
        const Curve c = load_curve(in, CurveFormat::Csv, "mem.csv");
        CHECK(c.vertices.size() == 2);
        CHECK(c.vertices[1][1] == doctest::Approx(2.5));
    }
    SUBCASE("dimension change reports the line") {
        std::istringstream in{"0,0\n1\n"};
        try {
            load_curve(in, CurveFormat::Csv, "mem.csv");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("mem.csv:2") != std::string::npos);
        }
    }
    SUBCASE("garbage coordinate reports the line") {
        std::istringstream in{"0,0\n1,zz\n"};
        CHECK_THROWS_AS(load_curve(in, CurveFormat::Csv, "mem.csv"), ParseError);
    }
    SUBCASE("a single vertex fails validation") {
        std::istringstream in{"0,0\n"};
        CHECK_THROWS_AS(load_curve(in, CurveFormat::Csv, "mem.csv"), ValidationError);
    }
}

TEST_CASE("json parsing and bit-exact round trip") {
    std::istringstream in{R"({"points": [[0,0],[1,0],[2,0]]})"};
    const Curve c = load_curve(in, CurveFormat::Json, "mem.json");
    CHECK(c.vertices.size() == 3);

    Curve fancy{{Point{0.1, -2.251e-17}, Point{1.0 / 3.0, 5.5}, Point{2, 0.1 + 0.2}}, "curve-7"};
    const std::string once = serialize_curve_json(fancy);
    std::istringstream round{once};
    const Curve back = load_curve(round, CurveFormat::Json, "mem.json");
    CHECK(back.id == fancy.id);
    REQUIRE(back.vertices.size() == fancy.vertices.size());
    for (std::size_t v = 0; v < back.vertices.size(); ++v) CHECK(back.vertices[v] == fancy.vertices[v]);
    CHECK(serialize_curve_json(back) == once);
}

TEST_CASE("csv round trip") {
    Curve fancy{{Point{0.1, 0.7}, Point{1.0 / 3.0, 5.5}}, ""};
    std::istringstream round{serialize_curve_csv(fancy)};
    const Curve back = load_curve(round, CurveFormat::Csv, "mem.csv");
    REQUIRE(back.vertices.size() == fancy.vertices.size());
    for (std::size_t v = 0; v < back.vertices.size(); ++v) CHECK(back.vertices[v] == fancy.vertices[v]);
}

TEST_CASE("duplicate vertices are kept but flagged") {
    const Curve c{{Point{0, 0}, Point{0, 0}, Point{1, 0}}, ""};
    const auto warnings = validate_curve(c);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("subsequence enumeration respects the two-vertex floor") {
    const Curve three{{Point{0, 0}, Point{1, 0}, Point{2, 0}}, ""};
    int count = 0;
    enumerate_subsequence_curves(three, 1, [&](const Curve& c, const std::vector<int>& dropped) {
        CHECK(c.vertices.size() + dropped.size() == three.vertices.size());
        ++count;
    });
    CHECK(count == 4);

    const Curve two{{Point{0, 0}, Point{1, 0}}, ""};
    count = 0;
    enumerate_subsequence_curves(two, 1, [&](const Curve&, const std::vector<int>&) { ++count; });
    CHECK(count == 1);

    const Curve four{{Point{0, 0}, Point{1, 0}, Point{2, 0}, Point{3, 0}}, ""};
    count = 0;
    enumerate_subsequence_curves(four, 2, [&](const Curve&, const std::vector<int>&) { ++count; });
    CHECK(count == 11);
}

TEST_CASE("spec validation ties k to the mode") {
    OutlierSpec spec;
    spec.mode = Mode::Classic;
    spec.k = 0;
    CHECK_NOTHROW(validate_spec(spec));
    spec.k = 1;
    CHECK_THROWS_AS(validate_spec(spec), InputError);
    spec.mode = Mode::UndirectedOutlier;
    CHECK_NOTHROW(validate_spec(spec));
    spec.k = 0;
    CHECK_THROWS_AS(validate_spec(spec), InputError);
}

}  // TEST_SUITE

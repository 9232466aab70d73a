#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "frechet/geometry.hpp"

namespace frechet {

// Polygonal curve with at least one edge. Vertices are 0-based: n+1 vertices
// span n edges, and eval() parametrizes the curve linearly over [0, n].
struct Curve {
    std::vector<Point> vertices;
    std::string id;

    int edges() const { return static_cast<int>(vertices.size()) - 1; }
    std::size_t dim() const { return vertices.empty() ? 0 : vertices.front().dim(); }

    const Point& vertex(int i) const { return vertices[static_cast<std::size_t>(i)]; }

    // (1-lambda)*p_i + lambda*p_{i+1} for t = i + lambda, 0 <= t <= edges().
    Point eval(double t) const;

    // The straight segment <p_i, p_a>, a >= i; a > i+1 makes it a shortcut.
    Segment shortcut(int i, int a) const;
};

// Vertices skipped by the shortcut <p_i, p_a>: a - i - 1, or 0 when a == i.
int shortcut_length(int i, int a);

// Throws ValidationError on structural problems; returns warnings for
// conditions that are kept but worth reporting (consecutive duplicates).
std::vector<std::string> validate_curve(const Curve& c);

enum class CurveFormat { Auto, Csv, Json };

// CSV: one point per line, comma-separated coordinates, '#' comments ignored.
// JSON: {"id": optional string, "points": [[x, y, ...], ...]}.
Curve load_curve(std::istream& in, CurveFormat format, const std::string& source_name = "<stream>");
Curve load_curve_file(const std::string& path, CurveFormat format = CurveFormat::Auto);

std::string serialize_curve_csv(const Curve& c);
std::string serialize_curve_json(const Curve& c);

enum class Mode { Classic, DirectedOutlier, UndirectedOutlier, ShortcutDirected };
enum class TargetCurve { First, Second };

const char* to_string(Mode mode);
Mode parse_mode(const std::string& s);

// Which distance variant to decide/compute. `target` names the curve that
// receives omissions (directed mode) or shortcuts (shortcut mode); it is
// ignored in the symmetric modes.
struct OutlierSpec {
    int k = 0;
    Mode mode = Mode::UndirectedOutlier;
    TargetCurve target = TargetCurve::Second;
};

// Classic requires k == 0; the outlier/shortcut modes require k >= 1.
void validate_spec(const OutlierSpec& spec);

// Yields every subsequence of `curve` that keeps at least 2 vertices and
// deletes at most max_drop vertices (prefix and suffix deletions included).
void enumerate_subsequence_curves(const Curve& curve, int max_drop,
                                  const std::function<void(const Curve&, const std::vector<int>&)>& fn);

}  // namespace frechet

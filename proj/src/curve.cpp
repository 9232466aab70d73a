#include "frechet/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "frechet/errors.hpp"

namespace frechet {

Point Curve::eval(double t) const {
    const int n = edges();
    if (t < 0.0 || t > static_cast<double>(n)) throw InputError("curve parameter out of range");
    int i = std::min(static_cast<int>(std::floor(t)), n - 1);
    const double lambda = t - static_cast<double>(i);
    Point r = vertices[static_cast<std::size_t>(i)];
    const Point& nxt = vertices[static_cast<std::size_t>(i) + 1];
    for (std::size_t c = 0; c < r.dim(); ++c) r[c] = (1.0 - lambda) * r[c] + lambda * nxt[c];
    return r;
}

Segment Curve::shortcut(int i, int a) const {
    if (i < 0 || a < i || a > edges()) throw InputError("invalid shortcut indices");
    return Segment{vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(a)]};
}

int shortcut_length(int i, int a) {
    if (a < i) throw InputError("shortcut requires a >= i");
    return a == i ? 0 : a - i - 1;
}

std::vector<std::string> validate_curve(const Curve& c) {
    if (c.vertices.size() < 2) throw ValidationError("curve needs at least 2 vertices (one edge)");
    const std::size_t d = c.vertices.front().dim();
    if (d < 1) throw ValidationError("points need at least one coordinate");
    std::vector<std::string> warnings;
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
        if (c.vertices[v].dim() != d) throw ValidationError("mixed point dimensions within one curve");
        for (double x : c.vertices[v].coords)
            if (!std::isfinite(x)) throw ValidationError("non-finite coordinate at vertex " + std::to_string(v));
        if (v > 0 && c.vertices[v] == c.vertices[v - 1])
            warnings.push_back("consecutive duplicate vertices at index " + std::to_string(v));
    }
    return warnings;
}

namespace {

Curve parse_csv(std::istream& in, const std::string& source_name) {
    Curve c;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv{line};
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ' || sv.back() == '\t')) sv.remove_suffix(1);
        while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
        if (sv.empty() || sv.front() == '#') continue;
        Point p;
        std::stringstream fields{std::string{sv}};
        std::string field;
        while (std::getline(fields, field, ',')) {
            try {
                std::size_t used = 0;
                const double v = std::stod(field, &used);
                while (used < field.size() && std::isspace(static_cast<unsigned char>(field[used]))) ++used;
                if (used != field.size()) throw std::invalid_argument(field);
                p.coords.push_back(v);
            } catch (const std::exception&) {
                throw ParseError(source_name + ":" + std::to_string(line_no) + ": bad coordinate '" + field + "'");
            }
        }
        if (p.coords.empty())
            throw ParseError(source_name + ":" + std::to_string(line_no) + ": empty point record");
        if (!c.vertices.empty() && p.dim() != c.vertices.front().dim())
            throw ParseError(source_name + ":" + std::to_string(line_no) + ": point dimension changed from " +
                             std::to_string(c.vertices.front().dim()) + " to " + std::to_string(p.dim()));
        c.vertices.push_back(std::move(p));
    }
    return c;
}

Curve parse_json(std::istream& in, const std::string& source_name) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source_name + ": " + e.what());
    }
    Curve c;
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw ParseError(source_name + ": expected an object with a \"points\" array");
    if (j.contains("id")) c.id = j["id"].get<std::string>();
    for (const auto& jp : j["points"]) {
        if (!jp.is_array()) throw ParseError(source_name + ": each point must be an array of numbers");
        Point p;
        for (const auto& v : jp) p.coords.push_back(v.get<double>());
        c.vertices.push_back(std::move(p));
    }
    return c;
}

}  // namespace

Curve load_curve(std::istream& in, CurveFormat format, const std::string& source_name) {
    if (format == CurveFormat::Auto) {
        const auto dot = source_name.rfind('.');
        const bool json = dot != std::string::npos && source_name.substr(dot) == ".json";
        format = json ? CurveFormat::Json : CurveFormat::Csv;
    }
    Curve c = format == CurveFormat::Json ? parse_json(in, source_name) : parse_csv(in, source_name);
    validate_curve(c);
    return c;
}

Curve load_curve_file(const std::string& path, CurveFormat format) {
    std::ifstream in{path};
    if (!in) throw InputError("cannot open curve file: " + path);
    return load_curve(in, format, path);
}

std::string serialize_curve_csv(const Curve& c) {
    std::ostringstream out;
    out.precision(17);
    for (const Point& p : c.vertices) {
        for (std::size_t i = 0; i < p.dim(); ++i) out << (i ? "," : "") << p[i];
        out << '\n';
    }
    return out.str();
}

std::string serialize_curve_json(const Curve& c) {
    nlohmann::json j;
    if (!c.id.empty()) j["id"] = c.id;
    j["points"] = nlohmann::json::array();
    for (const Point& p : c.vertices) j["points"].push_back(p.coords);
    return j.dump();
}

const char* to_string(Mode mode) {
    switch (mode) {
        case Mode::Classic: return "classic";
        case Mode::DirectedOutlier: return "directed";
        case Mode::UndirectedOutlier: return "undirected";
        case Mode::ShortcutDirected: return "shortcut";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    if (s == "classic") return Mode::Classic;
    if (s == "directed") return Mode::DirectedOutlier;
    if (s == "undirected") return Mode::UndirectedOutlier;
    if (s == "shortcut") return Mode::ShortcutDirected;
    throw InputError("unknown mode: " + s);
}

void validate_spec(const OutlierSpec& spec) {
    if (spec.k < 0) throw InputError("k must be non-negative");
    if (spec.mode == Mode::Classic && spec.k != 0) throw InputError("classic mode requires k == 0");
    if (spec.mode != Mode::Classic && spec.k < 1) throw InputError("outlier/shortcut modes require k >= 1");
}

void enumerate_subsequence_curves(const Curve& curve, int max_drop,
                                  const std::function<void(const Curve&, const std::vector<int>&)>& fn) {
    if (max_drop < 0) throw InputError("max_drop must be non-negative");
    const int total = static_cast<int>(curve.vertices.size());
    std::vector<int> dropped;
    Curve sub;
    sub.id = curve.id;

    // Depth-first over vertices: keep or (budget permitting) drop each one.
    std::function<void(int)> walk = [&](int v) {
        if (v == total) {
            if (sub.vertices.size() >= 2) fn(sub, dropped);
            return;
        }
        sub.vertices.push_back(curve.vertices[static_cast<std::size_t>(v)]);
        walk(v + 1);
        sub.vertices.pop_back();
        if (static_cast<int>(dropped.size()) < max_drop) {
            dropped.push_back(v);
            walk(v + 1);
            dropped.pop_back();
        }
    };
    walk(0);
}

}  // namespace frechet

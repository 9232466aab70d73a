#include "frechet/export.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "frechet/geometry.hpp"

namespace frechet {

nlohmann::json freespace_json(const ReachTable& table) {
    nlohmann::json j;
    j["mode"] = to_string(table.spec().mode);
    j["k"] = table.k();
    j["eps"] = table.eps();
    j["n"] = table.n();
    j["m"] = table.m();
    j["decision"] = table.check_ending_points();

    auto& horizontal = j["horizontal"] = nlohmann::json::array();
    table.for_each_horizontal_fragment([&](int i, int row, int span, int h, const Fragment& f) {
        horizontal.push_back({{"i", i}, {"j", row}, {"span", span}, {"h", h}, {"lo", f.lo}, {"hi", f.hi}});
    });
    auto& vertical = j["vertical"] = nlohmann::json::array();
    table.for_each_vertical_fragment([&](int col, int row, int span, int h, const Fragment& f) {
        vertical.push_back({{"i", col}, {"j", row}, {"span", span}, {"h", h}, {"lo", f.lo}, {"hi", f.hi}});
    });

    auto& points = j["points"] = nlohmann::json::array();
    for (int px = 0; px <= table.n(); ++px)
        for (int py = 0; py <= table.m(); ++py)
            for (int h = 0; h <= table.k(); ++h)
                if (table.point_mask(px, py, h)) points.push_back({{"i", px}, {"j", py}, {"h", h}});

    auto& starts = j["starts"] = nlohmann::json::array();
    for (const auto& s : table.seeded_points()) starts.push_back({{"i", s[0]}, {"j", s[1]}, {"h", s[2]}});
    auto& endings = j["endings"] = nlohmann::json::array();
    for (const auto& e : table.ending_points()) endings.push_back({{"i", e[0]}, {"j", e[1]}, {"h", e[2]}});
    return j;
}

namespace {

struct SvgLayout {
    double scale = 48.0;
    double margin = 28.0;
    double header = 26.0;
    int n = 1, m = 1;

    double panel_height() const { return m * scale + header + margin; }
    double px(double x) const { return margin + x * scale; }
    double py(int layer, double y) const {
        return (layer + 1) * panel_height() - margin - y * scale;
    }
};

void append_free_space(std::ostringstream& svg, const SvgLayout& lay, const ReachTable& table, int layer) {
    // Per unit cell, sample the free region column-wise and emit polygons.
    const Curve& x = table.curve_x();
    const Curve& y = table.curve_y();
    constexpr int kSamples = 24;
    for (int i = 0; i < table.n(); ++i) {
        for (int j = 0; j < table.m(); ++j) {
            const Segment h_edge = x.shortcut(i, i + 1);
            const Segment v_edge = y.shortcut(j, j + 1);
            std::vector<std::array<double, 3>> columns;  // lambda, mu_lo, mu_hi
            for (int c = 0; c <= kSamples; ++c) {
                const double lambda = static_cast<double>(c) / kSamples;
                const ParamInterval f = point_segment_free_interval(v_edge, h_edge.at(lambda), table.eps());
                if (!f.empty()) columns.push_back({lambda, f.lo, f.hi});
            }
            std::size_t begin = 0;
            while (begin < columns.size()) {
                std::size_t end = begin + 1;
                while (end < columns.size() &&
                       columns[end][0] - columns[end - 1][0] < 1.5 / kSamples)
                    ++end;
                svg << "<polygon class=\"free\" points=\"";
                for (std::size_t c = begin; c < end; ++c)
                    svg << lay.px(i + columns[c][0]) << ',' << lay.py(layer, j + columns[c][1]) << ' ';
                for (std::size_t c = end; c-- > begin;)
                    svg << lay.px(i + columns[c][0]) << ',' << lay.py(layer, j + columns[c][2]) << ' ';
                svg << "\"/>\n";
                begin = end;
            }
        }
    }
}

}  // namespace

std::string freespace_svg(const ReachTable& table) {
    SvgLayout lay;
    lay.n = table.n();
    lay.m = table.m();
    const double width = lay.px(lay.n) + lay.margin;
    const double height = (table.k() + 1) * lay.panel_height();

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<style>\n"
           ".panel{fill:#e8e8ee;stroke:none}\n"
           ".free{fill:#ffffff;stroke:none}\n"
           ".grid{stroke:#b8b8c4;stroke-width:0.6}\n"
           ".reach{stroke:#d33;stroke-width:3;stroke-linecap:round}\n"
           ".reach-cut{stroke:#d33;stroke-width:3;stroke-linecap:round;stroke-dasharray:6 4;opacity:0.8}\n"
           ".pt{fill:#e08200}\n"
           ".start{fill:#1a8f1a}\n"
           ".ending{fill:#1a55cc}\n"
           ".label{font:14px sans-serif;fill:#222}\n"
           "</style>\n";

    for (int h = 0; h <= table.k(); ++h) {
        svg << "<rect class=\"panel\" x=\"" << lay.px(0) << "\" y=\"" << lay.py(h, lay.m) << "\" width=\""
            << lay.n * lay.scale << "\" height=\"" << lay.m * lay.scale << "\"/>\n";
        append_free_space(svg, lay, table, h);
        for (int gx = 0; gx <= lay.n; ++gx)
            svg << "<line class=\"grid\" x1=\"" << lay.px(gx) << "\" y1=\"" << lay.py(h, 0) << "\" x2=\""
                << lay.px(gx) << "\" y2=\"" << lay.py(h, lay.m) << "\"/>\n";
        for (int gy = 0; gy <= lay.m; ++gy)
            svg << "<line class=\"grid\" x1=\"" << lay.px(0) << "\" y1=\"" << lay.py(h, gy) << "\" x2=\""
                << lay.px(lay.n) << "\" y2=\"" << lay.py(h, gy) << "\"/>\n";
        svg << "<text class=\"label\" x=\"" << lay.margin << "\" y=\""
            << lay.py(h, lay.m) - 8.0 << "\">height " << h << "</text>\n";
    }

    table.for_each_horizontal_fragment([&](int i, int row, int span, int h, const Fragment& f) {
        svg << "<line class=\"" << (span > 1 ? "reach-cut" : "reach") << "\" x1=\"" << lay.px(i + f.lo * span)
            << "\" y1=\"" << lay.py(h, row) << "\" x2=\"" << lay.px(i + f.hi * span) << "\" y2=\""
            << lay.py(h, row) << "\"/>\n";
    });
    table.for_each_vertical_fragment([&](int col, int row, int span, int h, const Fragment& f) {
        svg << "<line class=\"" << (span > 1 ? "reach-cut" : "reach") << "\" x1=\"" << lay.px(col)
            << "\" y1=\"" << lay.py(h, row + f.lo * span) << "\" x2=\"" << lay.px(col) << "\" y2=\""
            << lay.py(h, row + f.hi * span) << "\"/>\n";
    });

    for (int px = 0; px <= table.n(); ++px)
        for (int py = 0; py <= table.m(); ++py)
            for (int h = 0; h <= table.k(); ++h)
                if (table.point_mask(px, py, h))
                    svg << "<circle class=\"pt\" cx=\"" << lay.px(px) << "\" cy=\"" << lay.py(h, py)
                        << "\" r=\"3\"/>\n";
    for (const auto& s : table.seeded_points())
        svg << "<circle class=\"start\" cx=\"" << lay.px(s[0]) << "\" cy=\"" << lay.py(s[2], s[1])
            << "\" r=\"5\"/>\n";
    for (const auto& e : table.ending_points())
        svg << "<circle class=\"ending\" cx=\"" << lay.px(e[0]) << "\" cy=\"" << lay.py(e[2], e[1])
            << "\" r=\"5\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace frechet

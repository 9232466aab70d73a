// Command-line front end: decision and distance queries over curve files,
// critical-value listing, free-space diagram export, and counter benchmarks.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "frechet/classic.hpp"
#include "frechet/critical_values.hpp"
#include "frechet/errors.hpp"
#include "frechet/export.hpp"
#include "frechet/oracle.hpp"
#include "frechet/reachability.hpp"

namespace {

using nlohmann::json;
using namespace frechet;

struct CommonArgs {
    std::string file_x, file_y;
    std::string format = "auto";
    std::string mode = "undirected";
    std::string target;  // empty: mode-dependent default
    std::string engine = "dp";
    int k = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_engine = true) {
    cmd->add_option("curve_a", args.file_x, "first curve file")->required();
    cmd->add_option("curve_b", args.file_y, "second curve file")->required();
    cmd->add_option("--format", args.format, "curve file format: csv|json|auto (default auto)")
        ->check(CLI::IsMember({"csv", "json", "auto"}));
    cmd->add_option("--mode", args.mode, "classic|directed|undirected|shortcut (default undirected)")
        ->check(CLI::IsMember({"classic", "directed", "undirected", "shortcut"}));
    cmd->add_option("--target", args.target,
                    "curve receiving omissions/shortcuts (first|second); defaults: directed=second, "
                    "shortcut=first")
        ->check(CLI::IsMember({"first", "second"}));
    cmd->add_option("--k", args.k, "outlier/shortcut budget (default 1; classic forces 0)");
    if (with_engine)
        cmd->add_option("--engine", args.engine, "dp|brute (default dp)")
            ->check(CLI::IsMember({"dp", "brute"}));
}

CurveFormat parse_format(const std::string& s) {
    if (s == "csv") return CurveFormat::Csv;
    if (s == "json") return CurveFormat::Json;
    return CurveFormat::Auto;
}

OutlierSpec make_spec(const CommonArgs& args) {
    OutlierSpec spec;
    spec.mode = parse_mode(args.mode);
    spec.k = spec.mode == Mode::Classic ? 0 : args.k;
    if (spec.k == 0) spec.mode = Mode::Classic;  // a zero budget is the classic distance
    if (!args.target.empty())
        spec.target = args.target == "first" ? TargetCurve::First : TargetCurve::Second;
    else
        spec.target = spec.mode == Mode::ShortcutDirected ? TargetCurve::First : TargetCurve::Second;
    validate_spec(spec);
    return spec;
}

json counters_json(const ReachCounters& c) {
    return json{{"cells", c.cells_processed},
                {"cellsWithEntry", c.cells_with_entry},
                {"intervalWrites", c.interval_writes},
                {"pointWrites", c.point_writes},
                {"slotsPerAxis", c.slots_per_axis},
                {"fragmentsTotal", c.fragments_total},
                {"fragmentsPeakSlot", c.fragments_peak_slot}};
}

json witness_json(double eps, const Witness& w) {
    return json{{"eps", eps},
                {"droppedX", w.dropped_x},
                {"droppedY", w.dropped_y},
                {"start", w.start},
                {"end", w.end}};
}

int cmd_decide(const CommonArgs& args, double eps) {
    const Curve x = load_curve_file(args.file_x, parse_format(args.format));
    const Curve y = load_curve_file(args.file_y, parse_format(args.format));
    const OutlierSpec spec = make_spec(args);

    json report{{"mode", to_string(spec.mode)}, {"k", spec.k}, {"eps", eps}, {"engine", args.engine}};
    bool decision = false;
    if (args.engine == "brute") {
        decision = brute_decide(x, y, spec, eps);
    } else {
        const DecideResult r = decide_outlier(x, y, spec, eps);
        decision = r.accepted;
        report["counters"] = counters_json(r.counters);
    }
    report["decision"] = decision;
    std::cout << (decision ? "yes" : "no") << '\n' << report.dump() << '\n';
    return decision ? 0 : 1;
}

int cmd_compute(const CommonArgs& args) {
    const Curve x = load_curve_file(args.file_x, parse_format(args.format));
    const Curve y = load_curve_file(args.file_y, parse_format(args.format));
    const OutlierSpec spec = make_spec(args);

    if (args.engine == "brute") {
        const double eps = brute_compute(x, y, spec);
        std::cout << eps << '\n' << json{{"eps", eps}, {"engine", "brute"}}.dump() << '\n';
        return 0;
    }
    const ComputeResult r = compute_distance(x, y, spec);
    std::cout << r.eps << '\n' << witness_json(r.eps, r.witness).dump() << '\n';
    return 0;
}

int cmd_criticals(const CommonArgs& args) {
    const Curve x = load_curve_file(args.file_x, parse_format(args.format));
    const Curve y = load_curve_file(args.file_y, parse_format(args.format));
    const OutlierSpec spec = make_spec(args);
    json out = json::array();
    for (const CriticalValue& v : enumerate_criticals(x, y, spec))
        out.push_back({{"value", v.value}, {"kind", to_string(v.kind)}, {"prov", v.prov}});
    std::cout << out.dump() << '\n';
    return 0;
}

int cmd_freespace(const CommonArgs& args, double eps, const std::string& out_prefix) {
    const Curve x = load_curve_file(args.file_x, parse_format(args.format));
    const Curve y = load_curve_file(args.file_y, parse_format(args.format));
    const OutlierSpec spec = make_spec(args);

    DecideOptions opts;
    ReachTable table(x, y, spec, eps, opts);
    table.seed_starting_points();
    table.process_cells();

    const std::string json_path = out_prefix + ".json";
    const std::string svg_path = out_prefix + ".svg";
    std::ofstream jf{json_path};
    if (!jf) throw InputError("cannot write " + json_path);
    jf << freespace_json(table).dump(2) << '\n';
    std::ofstream sf{svg_path};
    if (!sf) throw InputError("cannot write " + svg_path);
    sf << freespace_svg(table);
    std::cout << "wrote " << json_path << " and " << svg_path << '\n';
    return 0;
}

Curve random_curve(std::mt19937_64& rng, int vertices, const std::string& id) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    Curve c;
    c.id = id;
    for (int v = 0; v < vertices; ++v) c.vertices.push_back(Point{uni(rng), uni(rng)});
    return c;
}

int cmd_bench(const std::vector<int>& sizes, const std::vector<int>& ks, std::uint64_t seed, double eps_scale) {
    std::printf("%6s %6s %4s %12s %14s %14s %7s %12s %14s %5s\n", "n", "m", "k", "eps", "cells", "cellBound",
                "ratio", "slots", "slotBound", "ok");
    bool all_ok = true;
    for (int size : sizes) {
        for (int k : ks) {
            std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(size) << 20) ^ static_cast<std::uint64_t>(k));
            const Curve x = random_curve(rng, size + 1, "a");
            const Curve y = random_curve(rng, size + 1, "b");
            const double eps = eps_scale * distance(x.vertex(0), y.vertex(0));
            OutlierSpec spec;
            spec.k = k;
            spec.mode = Mode::UndirectedOutlier;
            const DecideResult r = decide_outlier(x, y, spec, eps);
            const int n = x.edges(), m = y.edges();
            const std::uint64_t cell_bound = static_cast<std::uint64_t>(n + 1) * (m + 1) * (k + 2) * (k + 2) *
                                             (k + 1);
            const std::uint64_t slot_bound = static_cast<std::uint64_t>(n + 1) * (m + 1) * (k + 2) * (k + 1);
            const bool ok = r.counters.cells_processed <= cell_bound && r.counters.slots_per_axis <= slot_bound;
            all_ok = all_ok && ok;
            std::printf("%6d %6d %4d %12.6f %14llu %14llu %7.3f %12llu %14llu %5s\n", n, m, k, eps,
                        static_cast<unsigned long long>(r.counters.cells_processed),
                        static_cast<unsigned long long>(cell_bound),
                        static_cast<double>(r.counters.cells_processed) / static_cast<double>(cell_bound),
                        static_cast<unsigned long long>(r.counters.slots_per_axis),
                        static_cast<unsigned long long>(slot_bound), ok ? "yes" : "NO");
        }
    }
    std::printf("%s\n", all_ok ? "bounds satisfied" : "bounds violated");
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-outlier Fréchet distance toolkit"};
    app.require_subcommand(1);

    CommonArgs dargs;
    double deps = 0.0;
    CLI::App* decide = app.add_subcommand("decide", "decide whether the distance is at most eps");
    add_common(decide, dargs);
    decide->add_option("--eps", deps, "distance threshold")->required();

    CommonArgs cargs;
    CLI::App* compute = app.add_subcommand("compute", "compute the exact distance and a witness");
    add_common(compute, cargs);

    CommonArgs kargs;
    CLI::App* criticals = app.add_subcommand("criticals", "list the sorted critical values");
    add_common(criticals, kargs, false);

    CommonArgs fargs;
    double feps = 0.0;
    std::string out_prefix = "freespace";
    CLI::App* freespace = app.add_subcommand("freespace", "export the outlier free-space diagram");
    add_common(freespace, fargs, false);
    freespace->add_option("--eps", feps, "distance threshold")->required();
    freespace->add_option("--out", out_prefix, "output path prefix (writes <prefix>.json and <prefix>.svg)");

    std::vector<int> bench_sizes{10, 20, 40};
    std::vector<int> bench_ks{1, 2};
    std::uint64_t bench_seed = 17;
    double bench_eps_scale = 0.5;
    CLI::App* bench = app.add_subcommand("bench", "run the counter benchmark on synthetic curves");
    bench->add_option("--sizes", bench_sizes, "edge counts per curve")->delimiter(',');
    bench->add_option("--ks", bench_ks, "outlier budgets")->delimiter(',');
    bench->add_option("--seed", bench_seed, "random seed");
    bench->add_option("--eps-scale", bench_eps_scale, "eps as a fraction of the start-pair distance");

    try {
        app.parse(argc, argv);
        if (decide->parsed()) return cmd_decide(dargs, deps);
        if (compute->parsed()) return cmd_compute(cargs);
        if (criticals->parsed()) return cmd_criticals(kargs);
        if (freespace->parsed()) return cmd_freespace(fargs, feps, out_prefix);
        if (bench->parsed()) return cmd_bench(bench_sizes, bench_ks, bench_seed, bench_eps_scale);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

#include "frechet/critical_values.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "frechet/errors.hpp"
#include "frechet/geometry.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frechet {

const char* to_string(CriticalKind kind) {
    switch (kind) {
        case CriticalKind::EndpointPair: return "endpoint";
        case CriticalKind::VertexEdge: return "vertex-edge";
        case CriticalKind::Monotonicity: return "monotonicity";
    }
    return "?";
}

namespace {

struct SpanLimits {
    int x = 1, y = 1;          // maximum shortcut span per curve
    bool pin_start_x = false;  // starts fixed at i = 0
    bool pin_start_y = false;
    bool corners_only = false;  // start (0,0) and end (n,m) only
};

SpanLimits span_limits(const Curve& x, const Curve& y, const OutlierSpec& spec) {
    SpanLimits lim;
    switch (spec.mode) {
        case Mode::Classic:
        case Mode::UndirectedOutlier:
            lim.x = spec.k + 1;
            lim.y = spec.k + 1;
            break;
        case Mode::DirectedOutlier:
            lim.x = spec.target == TargetCurve::First ? spec.k + 1 : 1;
            lim.y = spec.target == TargetCurve::Second ? spec.k + 1 : 1;
            lim.pin_start_x = spec.target == TargetCurve::Second;
            lim.pin_start_y = spec.target == TargetCurve::First;
            break;
        case Mode::ShortcutDirected:
            lim.x = spec.target == TargetCurve::First ? x.edges() : 1;
            lim.y = spec.target == TargetCurve::Second ? y.edges() : 1;
            lim.corners_only = true;
            break;
    }
    lim.x = std::min(lim.x, x.edges());
    lim.y = std::min(lim.y, y.edges());
    return lim;
}

bool value_close(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

void sort_dedup(std::vector<CriticalValue>& values) {
    std::sort(values.begin(), values.end(), [](const CriticalValue& a, const CriticalValue& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.prov < b.prov;
    });
    std::vector<CriticalValue> kept;
    kept.reserve(values.size());
    for (const CriticalValue& v : values)
        if (kept.empty() || !value_close(kept.back().value, v.value)) kept.push_back(v);
    // Nudge every value up by the deduplication tolerance. An event value
    // that round-trips through a square root can land one ulp below the
    // decision flip it causes; the nudge keeps "decide at the reported
    // value" true without disturbing the ordering.
    for (CriticalValue& v : kept) v.value += std::abs(v.value) * 1e-12;
    values.swap(kept);
}

template <class Emit>
void generate_endpoint_pairs(const Curve& x, const Curve& y, const OutlierSpec& spec, const SpanLimits& lim,
                             const Emit& emit) {
    const int n = x.edges();
    const int m = y.edges();
    if (lim.corners_only) {
        emit({distance(x.vertex(0), y.vertex(0)), CriticalKind::EndpointPair, {0, 0, 0, 0, 0}});
        emit({distance(x.vertex(n), y.vertex(m)), CriticalKind::EndpointPair, {0, 0, 1, 0, 0}});
        return;
    }
    const int imax = lim.pin_start_x ? 0 : std::min(spec.k, n - 1);
    const int jcap = lim.pin_start_y ? 0 : m - 1;
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; i + j <= spec.k && j <= std::min(spec.k, jcap); ++j) {
            emit({distance(x.vertex(i), y.vertex(j)), CriticalKind::EndpointPair, {i, j, 0, 0, 0}});
            emit({distance(x.vertex(n - i), y.vertex(m - j)), CriticalKind::EndpointPair, {i, j, 1, 0, 0}});
        }
}

// vertex_on_first = 1: vertices of x against (shortcut) edges of y.
template <class Emit>
void generate_vertex_edge(const Curve& verts, const Curve& edges, int max_span, int vertex_on_first, int v,
                          const Emit& emit) {
    for (int anchor = 0; anchor < edges.edges(); ++anchor)
        for (int span = 1; span <= max_span && anchor + span <= edges.edges(); ++span)
            emit({vertex_edge_critical(verts.vertex(v), edges.shortcut(anchor, anchor + span)),
                  CriticalKind::VertexEdge,
                  {vertex_on_first, v, anchor, span, 0}});
}

template <class Emit>
void generate_monotonicity(const Curve& verts, const Curve& edges, int max_span, int pair_on_first, int v1,
                           const Emit& emit) {
    for (int v2 = v1 + 1; v2 <= verts.edges(); ++v2)
        for (int anchor = 0; anchor < edges.edges(); ++anchor)
            for (int span = 1; span <= max_span && anchor + span <= edges.edges(); ++span)
                if (const auto value = monotonicity_critical(verts.vertex(v1), verts.vertex(v2),
                                                             edges.shortcut(anchor, anchor + span)))
                    emit({*value, CriticalKind::Monotonicity, {pair_on_first, v1, v2, anchor, span}});
}

}  // namespace

std::vector<CriticalValue> enumerate_criticals_serial(const Curve& x, const Curve& y, const OutlierSpec& spec) {
    validate_spec(spec);
    if (x.dim() != y.dim()) throw InputError("curves must share one dimension");
    const SpanLimits lim = span_limits(x, y, spec);
    std::vector<CriticalValue> values;
    const auto emit = [&](const CriticalValue& v) { values.push_back(v); };
    generate_endpoint_pairs(x, y, spec, lim, emit);
    for (int v = 0; v <= x.edges(); ++v) generate_vertex_edge(x, y, lim.y, 1, v, emit);
    for (int v = 0; v <= y.edges(); ++v) generate_vertex_edge(y, x, lim.x, 0, v, emit);
    for (int v = 0; v <= x.edges(); ++v) generate_monotonicity(x, y, lim.y, 1, v, emit);
    for (int v = 0; v <= y.edges(); ++v) generate_monotonicity(y, x, lim.x, 0, v, emit);
    sort_dedup(values);
    return values;
}

CriticalStats count_criticals(const Curve& x, const Curve& y, const OutlierSpec& spec) {
    validate_spec(spec);
    const SpanLimits lim = span_limits(x, y, spec);
    CriticalStats stats;
    const auto emit = [&](const CriticalValue& v) {
        switch (v.kind) {
            case CriticalKind::EndpointPair: ++stats.endpoint_pairs; break;
            case CriticalKind::VertexEdge: ++stats.vertex_edge; break;
            case CriticalKind::Monotonicity: ++stats.monotonicity; break;
        }
    };
    generate_endpoint_pairs(x, y, spec, lim, emit);
    for (int v = 0; v <= x.edges(); ++v) generate_vertex_edge(x, y, lim.y, 1, v, emit);
    for (int v = 0; v <= y.edges(); ++v) generate_vertex_edge(y, x, lim.x, 0, v, emit);
    for (int v = 0; v <= x.edges(); ++v) generate_monotonicity(x, y, lim.y, 1, v, emit);
    for (int v = 0; v <= y.edges(); ++v) generate_monotonicity(y, x, lim.x, 0, v, emit);
    return stats;
}

std::vector<CriticalValue> enumerate_criticals(const Curve& x, const Curve& y, const OutlierSpec& spec,
                                               Parallelism par) {
#ifdef _OPENMP
    if (par == Parallelism::Auto) {
        validate_spec(spec);
        if (x.dim() != y.dim()) throw InputError("curves must share one dimension");
        const SpanLimits lim = span_limits(x, y, spec);
        const int nv = x.edges() + 1;
        const int mv = y.edges() + 1;
        if (static_cast<long long>(nv) * mv * (lim.x + lim.y) < 1 << 13)
            return enumerate_criticals_serial(x, y, spec);

        std::vector<std::vector<CriticalValue>> buckets;
#pragma omp parallel
        {
#pragma omp single
            buckets.resize(static_cast<std::size_t>(omp_get_num_threads()));
            auto& local = buckets[static_cast<std::size_t>(omp_get_thread_num())];
            const auto emit = [&](const CriticalValue& v) { local.push_back(v); };
#pragma omp for schedule(static) nowait
            for (int v = 0; v < nv; ++v) {
                generate_vertex_edge(x, y, lim.y, 1, v, emit);
                generate_monotonicity(x, y, lim.y, 1, v, emit);
            }
#pragma omp for schedule(static) nowait
            for (int v = 0; v < mv; ++v) {
                generate_vertex_edge(y, x, lim.x, 0, v, emit);
                generate_monotonicity(y, x, lim.x, 0, v, emit);
            }
        }
        std::vector<CriticalValue> values;
        generate_endpoint_pairs(x, y, spec, lim, [&](const CriticalValue& v) { values.push_back(v); });
        for (auto& bucket : buckets) values.insert(values.end(), bucket.begin(), bucket.end());
        sort_dedup(values);
        return values;
    }
#else
    (void)par;
#endif
    return enumerate_criticals_serial(x, y, spec);
}

ComputeResult compute_distance(const Curve& x, const Curve& y, const OutlierSpec& spec,
                               const DecideOptions& opts) {
    std::vector<CriticalValue> candidates = enumerate_criticals(x, y, spec, opts.parallelism);
    if (candidates.empty()) throw std::logic_error("internal error: empty critical value set");

    ComputeResult result;
    result.candidate_count = candidates.size();
    DecideOptions plain = opts;
    plain.witness = false;

    const auto decide = [&](double eps) {
        ++result.decisions;
        return decide_outlier(x, y, spec, eps, plain).accepted;
    };
    // Probe between consecutive candidates: decisions are constant strictly
    // inside those ranges, so the probes are insensitive to ulp-level ties at
    // the event values themselves.
    const auto probe = [&](std::size_t idx) {
        return idx + 1 < candidates.size() ? 0.5 * (candidates[idx].value + candidates[idx + 1].value)
                                           : candidates[idx].value;
    };
    if (!decide(probe(candidates.size() - 1)))
        throw std::logic_error("internal error: largest critical value rejected");
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (decide(probe(mid)))
            hi = mid;
        else
            lo = mid + 1;
    }
    result.eps = candidates[lo].value;

    DecideOptions with_witness = opts;
    with_witness.witness = true;
    DecideResult final = decide_outlier(x, y, spec, result.eps, with_witness);
    if (!final.accepted) throw std::logic_error("internal error: accepted candidate rejected on rerun");
    result.last_counters = final.counters;
    if (final.witness) result.witness = *final.witness;
    return result;
}

}  // namespace frechet

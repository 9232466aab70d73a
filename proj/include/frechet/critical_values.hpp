#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "frechet/curve.hpp"
#include "frechet/kernels.hpp"
#include "frechet/reachability.hpp"

namespace frechet {

enum class CriticalKind { EndpointPair, VertexEdge, Monotonicity };

const char* to_string(CriticalKind kind);

// One candidate eps at which the decision predicate can flip, with the
// indices that generated it. For EndpointPair, prov is {i, j, is_end, 0, 0};
// for VertexEdge {vertex_on_first, vertex, anchor, span, 0}; for Monotonicity
// {pair_on_first, v1, v2, anchor, span}.
struct CriticalValue {
    double value = 0.0;
    CriticalKind kind = CriticalKind::EndpointPair;
    std::array<int, 5> prov{};
};

// All three candidate types for the given mode and budget, sorted ascending
// and deduplicated within relative tolerance 1e-12. The list is a superset of
// every eps where the decision can change, and is deterministic regardless of
// the parallelism used to generate it.
std::vector<CriticalValue> enumerate_criticals(const Curve& x, const Curve& y, const OutlierSpec& spec,
                                               Parallelism par = Parallelism::Auto);

// Serial reference for the enumeration kernel (identical output).
std::vector<CriticalValue> enumerate_criticals_serial(const Curve& x, const Curve& y, const OutlierSpec& spec);

// Raw per-type candidate counts before deduplication, for the counter tests
// and reports.
struct CriticalStats {
    std::size_t endpoint_pairs = 0;
    std::size_t vertex_edge = 0;
    std::size_t monotonicity = 0;
};
CriticalStats count_criticals(const Curve& x, const Curve& y, const OutlierSpec& spec);

struct ComputeResult {
    double eps = 0.0;
    Witness witness;
    std::size_t candidate_count = 0;
    std::size_t decisions = 0;
    ReachCounters last_counters;
};

// Smallest enumerated critical value accepted by the decision procedure,
// found by binary search over the sorted candidate list, with the witness
// extracted at the result.
ComputeResult compute_distance(const Curve& x, const Curve& y, const OutlierSpec& spec,
                               const DecideOptions& opts = {});

}  // namespace frechet

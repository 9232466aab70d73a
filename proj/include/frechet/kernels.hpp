#pragma once

#include <cstddef>
#include <vector>

#include "frechet/curve.hpp"
#include "frechet/geometry.hpp"

namespace frechet {

// Serial forces single-threaded execution; Auto uses OpenMP for large inputs
// when compiled with it. Results are identical either way.
enum class Parallelism { Serial, Auto };

// Free interval of every (shortcut) edge of `along` against every vertex of
// `against`: at(i, j, span) = {t : |edge<p_i, p_{i+span}>(t) - q_j| <= eps}.
// Slots whose edge leaves the curve (i + span > edges) stay empty; span 0
// slots are kept so that indexing matches the span dimension used elsewhere.
struct FreeSpaceTable {
    int anchors = 0;    // i in [0, anchors]
    int verts = 0;      // j in [0, verts]
    int max_span = 0;   // span in [0, max_span]
    std::vector<ParamInterval> data;

    std::size_t index(int i, int j, int span) const {
        return (static_cast<std::size_t>(i) * static_cast<std::size_t>(verts + 1) +
                static_cast<std::size_t>(j)) *
                   static_cast<std::size_t>(max_span + 1) +
               static_cast<std::size_t>(span);
    }
    const ParamInterval& at(int i, int j, int span) const { return data[index(i, j, span)]; }
    ParamInterval& at(int i, int j, int span) { return data[index(i, j, span)]; }
};

// The data-parallel kernel behind table construction. build_free_space_table
// dispatches on `par`; the _serial variant is the reference implementation
// and is kept callable for tests and benchmarks.
FreeSpaceTable build_free_space_table(const Curve& along, const Curve& against, int max_span, double eps,
                                      Parallelism par = Parallelism::Auto);
FreeSpaceTable build_free_space_table_serial(const Curve& along, const Curve& against, int max_span, double eps);

}  // namespace frechet

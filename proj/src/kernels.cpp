#include "frechet/kernels.hpp"

#include "frechet/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frechet {

namespace {

void fill_slot_range(FreeSpaceTable& t, const Curve& along, const Curve& against, double eps,
                     std::size_t begin, std::size_t end) {
    const int n = along.edges();
    const std::size_t span_dim = static_cast<std::size_t>(t.max_span + 1);
    const std::size_t vert_dim = static_cast<std::size_t>(t.verts + 1);
    for (std::size_t flat = begin; flat < end; ++flat) {
        const int span = static_cast<int>(flat % span_dim);
        const int j = static_cast<int>((flat / span_dim) % vert_dim);
        const int i = static_cast<int>(flat / (span_dim * vert_dim));
        if (span < 1 || i + span > n) continue;
        t.data[flat] = point_segment_free_interval(along.shortcut(i, i + span), against.vertex(j), eps);
    }
}

}  // namespace

FreeSpaceTable build_free_space_table_serial(const Curve& along, const Curve& against, int max_span, double eps) {
    if (max_span < 1) throw InputError("max_span must be at least 1");
    FreeSpaceTable t;
    t.anchors = along.edges();
    t.verts = against.edges();
    t.max_span = max_span;
    t.data.assign(static_cast<std::size_t>(t.anchors + 1) * static_cast<std::size_t>(t.verts + 1) *
                      static_cast<std::size_t>(max_span + 1),
                  ParamInterval{});
    fill_slot_range(t, along, against, eps, 0, t.data.size());
    return t;
}

FreeSpaceTable build_free_space_table(const Curve& along, const Curve& against, int max_span, double eps,
                                      Parallelism par) {
#ifdef _OPENMP
    if (par == Parallelism::Auto) {
        FreeSpaceTable t;
        t.anchors = along.edges();
        t.verts = against.edges();
        t.max_span = max_span;
        const std::size_t total = static_cast<std::size_t>(t.anchors + 1) *
                                  static_cast<std::size_t>(t.verts + 1) *
                                  static_cast<std::size_t>(max_span + 1);
        t.data.assign(total, ParamInterval{});
        if (total >= 1u << 14) {
#pragma omp parallel
            {
                const int threads = omp_get_num_threads();
                const int tid = omp_get_thread_num();
                const std::size_t chunk = (total + threads - 1) / threads;
                const std::size_t begin = std::min(total, chunk * static_cast<std::size_t>(tid));
                const std::size_t end = std::min(total, begin + chunk);
                fill_slot_range(t, along, against, eps, begin, end);
            }
            return t;
        }
        fill_slot_range(t, along, against, eps, 0, total);
        return t;
    }
#else
    (void)par;
#endif
    return build_free_space_table_serial(along, against, max_span, eps);
}

}  // namespace frechet

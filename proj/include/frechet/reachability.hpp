#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "frechet/curve.hpp"
#include "frechet/kernels.hpp"

namespace frechet {

// Operation counters backing the complexity assertions and the bench tool.
struct ReachCounters {
    std::uint64_t cells_processed = 0;   // in-range cells visited by the main loop
    std::uint64_t cells_with_entry = 0;  // cells that had a non-empty entry set
    std::uint64_t interval_writes = 0;
    std::uint64_t point_writes = 0;
    std::uint64_t slots_per_axis = 0;    // allocated interval slots, per axis
    std::uint64_t fragments_total = 0;
    std::uint64_t fragments_peak_slot = 0;
};

// Certificate for an accepted decision: which vertices were dropped, the
// realized start/end vertex pairs (original indices), and a monotone path
// through the parameter rectangle of the surviving curves.
struct Witness {
    std::vector<int> dropped_x, dropped_y;
    std::array<int, 2> start{0, 0};
    std::array<int, 2> end{0, 0};
    std::vector<std::array<double, 2>> path;
};

struct DecideOptions {
    bool witness = false;
    Parallelism parallelism = Parallelism::Auto;
    std::uint64_t max_table_bytes = 6ull << 30;
};

struct DecideResult {
    bool accepted = false;
    ReachCounters counters;
    std::optional<Witness> witness;
};

// One reachable fragment of an interval slot, with the cell that wrote it.
struct Fragment {
    double lo = 0.0, hi = 0.0;
    std::uint64_t prov = 0;
};

// The outlier free-space reachability store. Horizontal slots hold reachable
// fragments on the edge <p_i, p_{i+span}> at row j and height h; vertical
// slots the mirror image on column i. Grid points carry a 4-bit mask telling
// with which movement classes (moved on x, moved on y) the point has been
// reached; paths that never move along an axis would leave fewer than two
// vertices on that curve, so only the moved-both class can accept.
class ReachTable {
public:
    ReachTable(const Curve& x, const Curve& y, const OutlierSpec& spec, double eps, const DecideOptions& opts);

    void seed_starting_points();
    void process_cells();
    bool check_ending_points() const;
    std::optional<Witness> extract_witness() const;

    int n() const { return n_; }
    int m() const { return m_; }
    int k() const { return k_; }
    double eps() const { return eps_; }
    const OutlierSpec& spec() const { return spec_; }
    const Curve& curve_x() const { return x_; }
    const Curve& curve_y() const { return y_; }
    int max_span_h() const { return max_span_h_; }
    int max_span_v() const { return max_span_v_; }

    const ReachCounters& counters() const { return counters_; }

    // Accessors used by the exporter and by tests.
    const FreeSpaceTable& free_h() const { return free_h_; }  // at(i, j, span): X edge vs q_j
    const FreeSpaceTable& free_v() const { return free_v_; }  // at(j, i, span): Y edge vs p_i
    std::uint8_t point_mask(int i, int j, int h) const;
    void for_each_horizontal_fragment(
        const std::function<void(int i, int j, int span, int h, const Fragment&)>& fn) const;
    void for_each_vertical_fragment(
        const std::function<void(int i, int j, int span, int h, const Fragment&)>& fn) const;
    std::vector<std::array<int, 3>> seeded_points() const;   // (i, j, h)
    std::vector<std::array<int, 3>> ending_points() const;   // accepted (x, y, h)

private:
    struct Slot {
        Fragment head;
        std::unique_ptr<std::vector<Fragment>> tail;
        std::uint16_t count = 0;
    };

    enum Src : std::uint64_t { SrcSeed = 0, SrcRightLo = 1, SrcRightHi = 2, SrcTopLo = 3, SrcTopHi = 4 };

    std::size_t slot_index(int i, int j, int span, int h, bool horizontal) const;
    std::size_t point_index(int i, int j, int h) const;
    void visit_endings(const std::function<void(int, int, int)>& fn) const;
    void add_fragment(Slot& slot, double lo, double hi, std::uint64_t prov);
    void set_point_bit(std::size_t pidx, int bit, std::uint64_t prov);
    bool slot_covers(const Slot& s, double v) const;
    bool slot_has_interior(const Slot& s) const;
    double slot_min_lo(const Slot& s) const;
    void process_one_cell(int i, int j, int s, int t, int h);

    int length_h(int span) const;
    int length_v(int span) const;

    // Backtracking helpers (witness extraction).
    struct Step;
    void backtrack_point_bit(int i, int j, int h, int bit, std::vector<Step>& out) const;
    void backtrack_fragment(bool horizontal, int i, int j, int span, int h, double at,
                            std::vector<Step>& out) const;
    void resolve_cell_exit(int i, int j, int s, int t, int h, bool top_side, double pos, int needbit,
                           std::vector<Step>& out) const;

    const Curve& x_;
    const Curve& y_;
    OutlierSpec spec_;
    double eps_;
    int n_, m_, k_;
    int max_span_h_, max_span_v_;
    bool shortcut_heights_;
    bool pin_start_, pin_end_;    // directed: start/end fixed on the x axis
    bool pinned_corners_only_;    // shortcut: start (0,0), end (n,m) only
    bool track_provenance_;

    FreeSpaceTable free_h_, free_v_;
    std::vector<Slot> hslots_, vslots_;
    std::vector<std::uint8_t> pmask_;
    std::vector<std::uint64_t> pprov_;
    ReachCounters counters_;
};

// Decides whether the distance selected by `spec` is at most eps. The classic
// mode and k = 0 reproduce the ordinary Fréchet decision.
DecideResult decide_outlier(const Curve& x, const Curve& y, const OutlierSpec& spec, double eps,
                            const DecideOptions& opts = {});

}  // namespace frechet

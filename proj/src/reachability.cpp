#include "frechet/reachability.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "frechet/errors.hpp"

namespace frechet {

namespace {

// Movement-class bits: bit index = moved_x * 2 + moved_y.
constexpr std::uint8_t kBit00 = 1u << 0;
constexpr std::uint8_t kBit01 = 1u << 1;
constexpr std::uint8_t kBit10 = 1u << 2;
constexpr std::uint8_t kBit11 = 1u << 3;
constexpr std::uint8_t kMovedYBits = kBit01 | kBit11;   // cy = 1
constexpr std::uint8_t kStillYBits = kBit00 | kBit10;   // cy = 0
constexpr std::uint8_t kMovedXBits = kBit10 | kBit11;   // cx = 1
constexpr std::uint8_t kStillXBits = kBit00 | kBit01;   // cx = 0

constexpr int kMaxIndex = (1 << 14) - 1;
constexpr int kMaxK = 126;

std::uint64_t encode_prov(int i, int j, int s, int t, int h, std::uint64_t src) {
    return 1ull | (src << 1) | (static_cast<std::uint64_t>(h) << 4) |
           (static_cast<std::uint64_t>(t) << 11) | (static_cast<std::uint64_t>(s) << 19) |
           (static_cast<std::uint64_t>(j) << 33) | (static_cast<std::uint64_t>(i) << 47);
}

struct ProvFields {
    int i, j, s, t, h;
    std::uint64_t src;
};

ProvFields decode_prov(std::uint64_t p) {
    ProvFields f{};
    f.src = (p >> 1) & 0x7;
    f.h = static_cast<int>((p >> 4) & 0x7F);
    f.t = static_cast<int>((p >> 11) & 0xFF);
    f.s = static_cast<int>((p >> 19) & 0x3FFF);
    f.j = static_cast<int>((p >> 33) & 0x3FFF);
    f.i = static_cast<int>((p >> 47) & 0x3FFF);
    return f;
}

}  // namespace

ReachTable::ReachTable(const Curve& x, const Curve& y, const OutlierSpec& spec, double eps,
                       const DecideOptions& opts)
    : x_(x), y_(y), spec_(spec), eps_(eps) {
    if (x.dim() != y.dim()) throw InputError("curves must share one dimension");
    if (eps < 0.0) throw InputError("eps must be non-negative");
    validate_spec(spec);
    n_ = x.edges();
    m_ = y.edges();
    k_ = spec.k;
    if (n_ > kMaxIndex || m_ > kMaxIndex) throw InputError("curve too large for the reachability table");
    if (k_ > kMaxK) throw InputError("k too large for the reachability table");

    shortcut_heights_ = spec.mode == Mode::ShortcutDirected;
    pin_start_ = pin_end_ = spec.mode == Mode::DirectedOutlier;
    pinned_corners_only_ = spec.mode == Mode::ShortcutDirected;
    track_provenance_ = opts.witness;

    switch (spec.mode) {
        case Mode::Classic:
        case Mode::UndirectedOutlier:
            max_span_h_ = k_ + 1;
            max_span_v_ = k_ + 1;
            break;
        case Mode::DirectedOutlier:
            max_span_h_ = 1;
            max_span_v_ = k_ + 1;
            break;
        case Mode::ShortcutDirected:
            max_span_h_ = n_;
            max_span_v_ = 1;
            break;
    }

    const std::size_t base = static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(m_ + 1);
    const std::size_t hcount = base * static_cast<std::size_t>(max_span_h_ + 1) * static_cast<std::size_t>(k_ + 1);
    const std::size_t vcount = base * static_cast<std::size_t>(max_span_v_ + 1) * static_cast<std::size_t>(k_ + 1);
    const std::size_t pcount = base * static_cast<std::size_t>(k_ + 1);
    const std::size_t free_entries =
        base * (static_cast<std::size_t>(max_span_h_ + 1) + static_cast<std::size_t>(max_span_v_ + 1));
    const std::size_t bytes = (hcount + vcount) * sizeof(Slot) + free_entries * sizeof(ParamInterval) +
                              pcount * (track_provenance_ ? 33 : 1);
    if (bytes > opts.max_table_bytes)
        throw ResourceError("reachability table would need about " + std::to_string(bytes >> 20) +
                            " MiB, above the configured budget");

    free_h_ = build_free_space_table(x, y, max_span_h_, eps, opts.parallelism);
    free_v_ = build_free_space_table(y, x, max_span_v_, eps, opts.parallelism);
    hslots_.resize(hcount);
    vslots_.resize(vcount);
    pmask_.assign(pcount, 0);
    if (track_provenance_) pprov_.assign(pcount * 4, 0);
    counters_.slots_per_axis = std::max(hcount, vcount);
}

std::size_t ReachTable::slot_index(int i, int j, int span, int h, bool horizontal) const {
    const int span_dim = (horizontal ? max_span_h_ : max_span_v_) + 1;
    return ((static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(j)) *
                static_cast<std::size_t>(span_dim) +
            static_cast<std::size_t>(span)) *
               static_cast<std::size_t>(k_ + 1) +
           static_cast<std::size_t>(h);
}

std::size_t ReachTable::point_index(int i, int j, int h) const {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(k_ + 1) +
           static_cast<std::size_t>(h);
}

int ReachTable::length_h(int span) const { return shortcut_heights_ ? (span > 1 ? 1 : 0) : span - 1; }
int ReachTable::length_v(int span) const { return span - 1; }

std::uint8_t ReachTable::point_mask(int i, int j, int h) const { return pmask_[point_index(i, j, h)]; }

namespace {
template <class SlotT, class Fn>
void each_fragment(const SlotT& s, Fn&& fn) {
    if (s.count == 0) return;
    fn(s.head);
    if (s.tail) {
        const std::size_t extra = static_cast<std::size_t>(s.count) - 1;
        for (std::size_t q = 0; q < extra && q < s.tail->size(); ++q) fn((*s.tail)[q]);
    }
}
}  // namespace

bool ReachTable::slot_covers(const Slot& s, double v) const {
    bool hit = false;
    each_fragment(s, [&](const Fragment& f) { hit = hit || (f.lo <= v && v <= f.hi); });
    return hit;
}

bool ReachTable::slot_has_interior(const Slot& s) const {
    bool hit = false;
    each_fragment(s, [&](const Fragment& f) { hit = hit || (f.hi > 0.0 && f.lo < 1.0); });
    return hit;
}

double ReachTable::slot_min_lo(const Slot& s) const { return s.count ? s.head.lo : 1.0; }

void ReachTable::add_fragment(Slot& slot, double lo, double hi, std::uint64_t prov) {
    ++counters_.interval_writes;
    if (!track_provenance_) {
        // Merge touching or overlapping fragments; provenance is not kept.
        double nlo = lo, nhi = hi;
        std::vector<Fragment> kept;
        kept.reserve(slot.count);
        each_fragment(slot, [&](const Fragment& f) {
            if (f.lo <= nhi && f.hi >= nlo) {
                nlo = std::min(nlo, f.lo);
                nhi = std::max(nhi, f.hi);
            } else {
                kept.push_back(f);
            }
        });
        kept.push_back(Fragment{nlo, nhi, 0});
        std::sort(kept.begin(), kept.end(), [](const Fragment& a, const Fragment& b) { return a.lo < b.lo; });
        counters_.fragments_total -= slot.count;
        counters_.fragments_total += kept.size();
        slot.head = kept.front();
        slot.count = static_cast<std::uint16_t>(kept.size());
        if (kept.size() > 1) {
            if (!slot.tail) slot.tail = std::make_unique<std::vector<Fragment>>();
            slot.tail->assign(kept.begin() + 1, kept.end());
        } else if (slot.tail) {
            slot.tail->clear();
        }
    } else {
        // Keep written pieces so each fragment's provenance stays valid for
        // every point it covers. Contained pieces are redundant.
        bool contained = false;
        each_fragment(slot, [&](const Fragment& f) { contained = contained || (f.lo <= lo && hi <= f.hi); });
        if (contained) return;
        std::vector<Fragment> kept;
        kept.reserve(slot.count + 1u);
        each_fragment(slot, [&](const Fragment& f) {
            if (!(lo <= f.lo && f.hi <= hi)) kept.push_back(f);
        });
        kept.push_back(Fragment{lo, hi, prov});
        std::sort(kept.begin(), kept.end(), [](const Fragment& a, const Fragment& b) { return a.lo < b.lo; });
        counters_.fragments_total -= slot.count;
        counters_.fragments_total += kept.size();
        slot.head = kept.front();
        slot.count = static_cast<std::uint16_t>(kept.size());
        if (kept.size() > 1) {
            if (!slot.tail) slot.tail = std::make_unique<std::vector<Fragment>>();
            slot.tail->assign(kept.begin() + 1, kept.end());
        } else if (slot.tail) {
            slot.tail->clear();
        }
    }
    counters_.fragments_peak_slot = std::max<std::uint64_t>(counters_.fragments_peak_slot, slot.count);
}

void ReachTable::set_point_bit(std::size_t pidx, int bit, std::uint64_t prov) {
    const std::uint8_t flag = static_cast<std::uint8_t>(1u << bit);
    if (pmask_[pidx] & flag) return;
    pmask_[pidx] |= flag;
    ++counters_.point_writes;
    if (track_provenance_) pprov_[pidx * 4 + static_cast<std::size_t>(bit)] = prov;
}

void ReachTable::seed_starting_points() {
    const double eps2 = eps_ * eps_;
    auto try_seed = [&](int i, int j) {
        if (squared_distance(x_.vertex(i), y_.vertex(j)) <= eps2) {
            set_point_bit(point_index(i, j, i + j), 0, encode_prov(i, j, 0, 0, i + j, SrcSeed));
        }
    };
    if (pinned_corners_only_) {
        if (squared_distance(x_.vertex(0), y_.vertex(0)) <= eps2)
            set_point_bit(point_index(0, 0, 0), 0, encode_prov(0, 0, 0, 0, 0, SrcSeed));
        return;
    }
    // Starting vertices must leave at least one edge on each curve.
    const int imax = pin_start_ ? 0 : std::min(k_, n_ - 1);
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; i + j <= k_ && j <= m_ - 1; ++j) try_seed(i, j);
}

std::vector<std::array<int, 3>> ReachTable::seeded_points() const {
    std::vector<std::array<int, 3>> out;
    const double eps2 = eps_ * eps_;
    auto collect = [&](int i, int j) {
        if (squared_distance(x_.vertex(i), y_.vertex(j)) <= eps2) out.push_back({i, j, i + j});
    };
    if (pinned_corners_only_) {
        collect(0, 0);
        return out;
    }
    const int imax = pin_start_ ? 0 : std::min(k_, n_ - 1);
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; i + j <= k_ && j <= m_ - 1; ++j) collect(i, j);
    return out;
}

void ReachTable::process_cells() {
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= m_; ++j)
            for (int s = 1; s <= max_span_h_ && i + s <= n_; ++s)
                for (int t = 1; t <= max_span_v_ && j + t <= m_; ++t)
                    for (int h = 0; h <= k_; ++h) process_one_cell(i, j, s, t, h);
}

void ReachTable::process_one_cell(int i, int j, int s, int t, int h) {
    const int a = i + s;
    const int b = j + t;
    const int lh = length_h(s);
    const int lv = length_v(t);
    const bool store_right = h + lh <= k_;
    const bool store_top = h + lv <= k_;
    if (!store_right && !store_top) return;
    ++counters_.cells_processed;

    const Slot& bot = hslots_[slot_index(i, j, s, h, true)];
    const Slot& lef = vslots_[slot_index(i, j, t, h, false)];
    const std::uint8_t cmask = pmask_[point_index(i, j, h)];
    // Through-corner entries: travel along the last column/row continues via
    // the far corners of cells that end on it; elsewhere the same paths are
    // covered by cells anchored at those corners.
    const std::uint8_t brmask = (a == n_ && store_right) ? pmask_[point_index(n_, j, h + lh)] : 0;
    const std::uint8_t tlmask = (b == m_ && store_top) ? pmask_[point_index(i, m_, h + lv)] : 0;

    const bool has_bot = bot.count > 0;
    const bool has_lef = lef.count > 0;
    if (!has_bot && !has_lef && !cmask && !brmask && !tlmask) return;
    ++counters_.cells_with_entry;

    const ParamInterval& rig = free_v_.at(j, a, t);
    const ParamInterval& top = free_h_.at(i, b, s);

    double min_mu = 2.0, min_lambda = 2.0;
    if (has_bot || cmask || brmask) min_mu = 0.0;
    else if (has_lef) min_mu = slot_min_lo(lef);
    else if (tlmask) min_mu = 1.0;
    if (has_lef || cmask || tlmask) min_lambda = 0.0;
    else if (has_bot) min_lambda = slot_min_lo(bot);
    else if (brmask) min_lambda = 1.0;

    const bool bot_interior = has_bot && slot_has_interior(bot);
    const bool lef_interior = has_lef && slot_has_interior(lef);

    if (store_right && min_mu <= 1.0) {
        const ParamInterval right_out = clip_low(rig, min_mu);
        if (!right_out.empty()) {
            add_fragment(vslots_[slot_index(a, j, t, h + lh, false)], right_out.lo, right_out.hi,
                         encode_prov(i, j, s, t, h, SrcRightLo));
            if (right_out.covers_one() && h + lh + lv <= k_)
                set_point_bit(point_index(a, b, h + lh + lv), 3, encode_prov(i, j, s, t, h, SrcRightHi));
            if (right_out.covers_zero()) {
                // Exits at mu = 0 keep the y-class of their source.
                const std::size_t pidx = point_index(a, j, h + lh);
                const std::uint64_t prov = encode_prov(i, j, s, t, h, SrcRightLo);
                if (bot_interior || (cmask & kMovedYBits)) set_point_bit(pidx, 3, prov);
                if (cmask & kStillYBits) set_point_bit(pidx, 2, prov);
            }
        }
    }
    if (store_top && min_lambda <= 1.0) {
        const ParamInterval top_out = clip_low(top, min_lambda);
        if (!top_out.empty()) {
            add_fragment(hslots_[slot_index(i, b, s, h + lv, true)], top_out.lo, top_out.hi,
                         encode_prov(i, j, s, t, h, SrcTopLo));
            if (top_out.covers_one() && h + lh + lv <= k_)
                set_point_bit(point_index(a, b, h + lh + lv), 3, encode_prov(i, j, s, t, h, SrcTopHi));
            if (top_out.covers_zero()) {
                // Exits at lambda = 0 keep the x-class of their source.
                const std::size_t pidx = point_index(i, b, h + lv);
                const std::uint64_t prov = encode_prov(i, j, s, t, h, SrcTopLo);
                if (lef_interior || (cmask & kMovedXBits)) set_point_bit(pidx, 3, prov);
                if (cmask & kStillXBits) set_point_bit(pidx, 1, prov);
            }
        }
    }
}

void ReachTable::visit_endings(const std::function<void(int, int, int)>& fn) const {
    if (pinned_corners_only_) {
        for (int h = 0; h <= k_; ++h)
            if (pmask_[point_index(n_, m_, h)] & (1u << 3)) fn(n_, m_, h);
        return;
    }
    // Ending vertices must leave at least one edge on each curve, and the
    // suffix omissions i + j must fit under the budget together with the
    // height of the reached point.
    const int imax = pin_end_ ? 0 : std::min(k_, n_ - 1);
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; i + j <= k_ && j <= m_ - 1; ++j)
            for (int h = 0; i + j + h <= k_; ++h)
                if (pmask_[point_index(n_ - i, m_ - j, h)] & (1u << 3)) fn(n_ - i, m_ - j, h);
}

bool ReachTable::check_ending_points() const {
    bool found = false;
    visit_endings([&](int, int, int) { found = true; });
    return found;
}

std::vector<std::array<int, 3>> ReachTable::ending_points() const {
    std::vector<std::array<int, 3>> out;
    visit_endings([&](int px, int py, int h) { out.push_back({px, py, h}); });
    return out;
}

void ReachTable::for_each_horizontal_fragment(
    const std::function<void(int, int, int, int, const Fragment&)>& fn) const {
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= m_; ++j)
            for (int s = 1; s <= max_span_h_; ++s)
                for (int h = 0; h <= k_; ++h)
                    each_fragment(hslots_[slot_index(i, j, s, h, true)],
                                  [&](const Fragment& f) { fn(i, j, s, h, f); });
}

void ReachTable::for_each_vertical_fragment(
    const std::function<void(int, int, int, int, const Fragment&)>& fn) const {
    for (int i = 0; i <= n_; ++i)
        for (int j = 0; j <= m_; ++j)
            for (int t = 1; t <= max_span_v_; ++t)
                for (int h = 0; h <= k_; ++h)
                    each_fragment(vslots_[slot_index(i, j, t, h, false)],
                                  [&](const Fragment& f) { fn(i, j, t, h, f); });
}

// ---------------------------------------------------------------------------
// Witness extraction: walk the recorded provenance backwards from an accepted
// ending point to a seed, re-deriving inside each writer cell which entry can
// reach the targeted exit point with the required movement class.

struct ReachTable::Step {
    int i, j, s, t, h;       // the traversed cell
    double ex, ey, gx, gy;   // entry and exit in diagram coordinates
};

namespace {

// What a backtracking query asks of a cell: an exit point on one side plus
// the movement-class bit it must carry.
enum class ExitSide { Right, Top };

}  // namespace

void ReachTable::backtrack_fragment(bool horizontal, int i, int j, int span, int h, double at,
                                    std::vector<Step>& out) const {
    const Slot& slot = horizontal ? hslots_[slot_index(i, j, span, h, true)]
                                  : vslots_[slot_index(i, j, span, h, false)];
    std::uint64_t prov = 0;
    each_fragment(slot, [&](const Fragment& f) {
        if (!prov && f.lo <= at && at <= f.hi) prov = f.prov;
    });
    if (!prov) throw std::logic_error("witness backtrack: fragment not found");
    const ProvFields w = decode_prov(prov);
    // A horizontal slot is written by the top exit of its writer, a vertical
    // slot by the right exit; fragment interiors always carry class (1,1).
    resolve_cell_exit(w.i, w.j, w.s, w.t, w.h, horizontal, at, 3, out);
}

void ReachTable::backtrack_point_bit(int i, int j, int h, int bit, std::vector<Step>& out) const {
    const std::uint64_t prov = pprov_[point_index(i, j, h) * 4 + static_cast<std::size_t>(bit)];
    if (!prov) throw std::logic_error("witness backtrack: point bit without provenance");
    const ProvFields w = decode_prov(prov);
    switch (w.src) {
        case SrcSeed:
            return;  // recursion bottom: (i, j) is a seeded starting point
        case SrcRightLo:
            resolve_cell_exit(w.i, w.j, w.s, w.t, w.h, false, 0.0, bit, out);
            return;
        case SrcRightHi:
            resolve_cell_exit(w.i, w.j, w.s, w.t, w.h, false, 1.0, bit, out);
            return;
        case SrcTopLo:
            resolve_cell_exit(w.i, w.j, w.s, w.t, w.h, true, 0.0, bit, out);
            return;
        case SrcTopHi:
            resolve_cell_exit(w.i, w.j, w.s, w.t, w.h, true, 1.0, bit, out);
            return;
        default:
            throw std::logic_error("witness backtrack: bad provenance source");
    }
}

void ReachTable::resolve_cell_exit(int i, int j, int s, int t, int h, bool top_side, double pos, int needbit,
                                   std::vector<Step>& out) const {
    const int a = i + s;
    const int b = j + t;
    const int lh = length_h(s);
    const int lv = length_v(t);
    const Slot& bot = hslots_[slot_index(i, j, s, h, true)];
    const Slot& lef = vslots_[slot_index(i, j, t, h, false)];
    const std::uint8_t cmask = pmask_[point_index(i, j, h)];
    // Through-corner entries at the far corners. Beyond the last row/column
    // they exist whenever an entry fragment ends exactly on the corner; the
    // corner's own class mask is then authoritative.
    const bool br_ok = h + lh <= k_ && (a == n_ || slot_covers(bot, 1.0));
    const bool tl_ok = h + lv <= k_ && (b == m_ || slot_covers(lef, 1.0));
    const std::uint8_t brmask = br_ok ? pmask_[point_index(a, j, h + lh)] : 0;
    const std::uint8_t tlmask = tl_ok ? pmask_[point_index(i, b, h + lv)] : 0;

    Step step;
    step.i = i;
    step.j = j;
    step.s = s;
    step.t = t;
    step.h = h;
    step.gx = top_side ? i + pos * s : a;
    step.gy = top_side ? b : j + pos * t;

    // An entry point strictly inside (0,1) and at most `limit`; such points
    // always carry movement class (1,1).
    auto pick_interior = [&](const Slot& slot, double limit) -> std::optional<double> {
        std::optional<double> best;
        each_fragment(slot, [&](const Fragment& f) {
            if (best) return;
            const double lo_eff = std::max(f.lo, 0.0);
            const double hi_eff = std::min({f.hi, limit, 1.0});
            if (lo_eff > hi_eff) return;
            if (lo_eff > 0.0 && lo_eff < 1.0)
                best = lo_eff;
            else if (hi_eff > 0.0 && hi_eff < 1.0)
                best = hi_eff;
            else if (lo_eff < hi_eff)
                best = 0.5 * (lo_eff + hi_eff);
        });
        return best;
    };
    auto first_bit = [](std::uint8_t mask) {
        for (int bitpos = 0; bitpos < 4; ++bitpos)
            if (mask & (1u << bitpos)) return bitpos;
        return -1;
    };
    auto take_corner = [&](int ci, int cj, int ch, std::uint8_t bits, double ex, double ey) {
        step.ex = ex;
        step.ey = ey;
        out.push_back(step);
        backtrack_point_bit(ci, cj, ch, first_bit(bits), out);
    };

    if (!top_side) {
        // Exit on the right side at mu = pos.
        const double mu = pos;
        if (needbit == 3) {
            if (const auto l0 = pick_interior(bot, 1.0)) {
                step.ex = i + *l0 * s;
                step.ey = j;
                out.push_back(step);
                backtrack_fragment(true, i, j, s, h, *l0, out);
                return;
            }
            if (mu > 0.0) {
                if (const auto m0 = pick_interior(lef, mu)) {
                    step.ex = i;
                    step.ey = j + *m0 * t;
                    out.push_back(step);
                    backtrack_fragment(false, i, j, t, h, *m0, out);
                    return;
                }
            }
            const std::uint8_t cbits = mu > 0.0 ? cmask : static_cast<std::uint8_t>(cmask & kMovedYBits);
            if (cbits) return take_corner(i, j, h, cbits, i, j);
            const std::uint8_t brbits = mu > 0.0 ? static_cast<std::uint8_t>(brmask & kMovedXBits)
                                                 : static_cast<std::uint8_t>(brmask & kBit11);
            if (brbits) return take_corner(a, j, h + lh, brbits, a, j);
            if (mu >= 1.0 && (tlmask & kMovedYBits))
                return take_corner(i, b, h + lv, tlmask & kMovedYBits, i, b);
        } else if (needbit == 2) {
            const std::uint8_t cbits = static_cast<std::uint8_t>(cmask & kStillYBits);
            if (mu == 0.0 && cbits) return take_corner(i, j, h, cbits, i, j);
        }
    } else {
        // Exit on the top side at lambda = pos.
        const double lambda = pos;
        if (needbit == 3) {
            if (const auto m0 = pick_interior(lef, 1.0)) {
                step.ex = i;
                step.ey = j + *m0 * t;
                out.push_back(step);
                backtrack_fragment(false, i, j, t, h, *m0, out);
                return;
            }
            if (lambda > 0.0) {
                if (const auto l0 = pick_interior(bot, lambda)) {
                    step.ex = i + *l0 * s;
                    step.ey = j;
                    out.push_back(step);
                    backtrack_fragment(true, i, j, s, h, *l0, out);
                    return;
                }
            }
            const std::uint8_t cbits = lambda > 0.0 ? cmask : static_cast<std::uint8_t>(cmask & kMovedXBits);
            if (cbits) return take_corner(i, j, h, cbits, i, j);
            const std::uint8_t tlbits = lambda > 0.0 ? static_cast<std::uint8_t>(tlmask & kMovedYBits)
                                                     : static_cast<std::uint8_t>(tlmask & kBit11);
            if (tlbits) return take_corner(i, b, h + lv, tlbits, i, b);
            if (lambda >= 1.0 && (brmask & kMovedXBits))
                return take_corner(a, j, h + lh, brmask & kMovedXBits, a, j);
        } else if (needbit == 1) {
            const std::uint8_t cbits = static_cast<std::uint8_t>(cmask & kStillXBits);
            if (lambda == 0.0 && cbits) return take_corner(i, j, h, cbits, i, j);
        }
    }
    throw std::logic_error("witness backtrack: no entry re-derivable for cell exit");
}

std::optional<Witness> ReachTable::extract_witness() const {
    if (!track_provenance_) return std::nullopt;
    std::optional<std::array<int, 3>> end;
    visit_endings([&](int px, int py, int h) {
        if (!end) end = {px, py, h};
    });
    if (!end) return std::nullopt;

    std::vector<Step> steps;
    backtrack_point_bit((*end)[0], (*end)[1], (*end)[2], 3, steps);
    std::reverse(steps.begin(), steps.end());
    if (steps.empty()) throw std::logic_error("witness backtrack: accepted ending without any step");

    Witness w;
    w.end = {(*end)[0], (*end)[1]};
    w.start = {static_cast<int>(std::lround(steps.front().ex)), static_cast<int>(std::lround(steps.front().ey))};

    // Vertices kept on each curve: the start pair plus the endpoints of every
    // edge the path actually advanced along.
    std::vector<int> keep_x{w.start[0], w.end[0]};
    std::vector<int> keep_y{w.start[1], w.end[1]};
    for (const Step& st : steps) {
        if (st.gx > st.ex) {
            keep_x.push_back(st.i);
            keep_x.push_back(st.i + st.s);
        }
        if (st.gy > st.ey) {
            keep_y.push_back(st.j);
            keep_y.push_back(st.j + st.t);
        }
    }
    auto uniq = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(keep_x);
    uniq(keep_y);
    for (int v = 0; v <= n_; ++v)
        if (!std::binary_search(keep_x.begin(), keep_x.end(), v)) w.dropped_x.push_back(v);
    for (int v = 0; v <= m_; ++v)
        if (!std::binary_search(keep_y.begin(), keep_y.end(), v)) w.dropped_y.push_back(v);

    // Map diagram coordinates into the parameter rectangle of the survivors.
    auto remap = [](const std::vector<int>& keep, double v) {
        const auto it = std::upper_bound(keep.begin(), keep.end(), v);
        const std::size_t r = static_cast<std::size_t>(it - keep.begin());
        if (r == 0) throw std::logic_error("witness path point before the surviving range");
        if (r == keep.size()) return static_cast<double>(keep.size() - 1);
        const int lo = keep[r - 1], hi = keep[r];
        return static_cast<double>(r - 1) + (v - lo) / static_cast<double>(hi - lo);
    };
    auto push_point = [&](double vx, double vy) {
        const std::array<double, 2> p{remap(keep_x, vx), remap(keep_y, vy)};
        if (w.path.empty() || w.path.back() != p) w.path.push_back(p);
    };
    for (const Step& st : steps) {
        push_point(st.ex, st.ey);
        push_point(st.gx, st.gy);
    }
    return w;
}

DecideResult decide_outlier(const Curve& x, const Curve& y, const OutlierSpec& spec, double eps,
                            const DecideOptions& opts) {
    validate_spec(spec);
    const bool swapped = (spec.mode == Mode::DirectedOutlier && spec.target == TargetCurve::First) ||
                         (spec.mode == Mode::ShortcutDirected && spec.target == TargetCurve::Second);
    const Curve& first = swapped ? y : x;
    const Curve& second = swapped ? x : y;

    ReachTable table(first, second, spec, eps, opts);
    table.seed_starting_points();
    table.process_cells();

    DecideResult result;
    result.accepted = table.check_ending_points();
    result.counters = table.counters();
    if (opts.witness && result.accepted) {
        result.witness = table.extract_witness();
        if (swapped && result.witness) {
            Witness& w = *result.witness;
            std::swap(w.dropped_x, w.dropped_y);
            std::swap(w.start[0], w.start[1]);
            std::swap(w.end[0], w.end[1]);
            for (auto& p : w.path) std::swap(p[0], p[1]);
        }
    }
    return result;
}

}  // namespace frechet

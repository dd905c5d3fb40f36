#include "minlink/stage_one.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace minlink {

ConvexRegion pt_region(const Interval& a, const Instance& inst) {
    const SegmentGeom g = interval_geom(a, inst);
    if (a.links == 0) {
        return ConvexRegion::sweep(g, {});
    }
    return ConvexRegion::sweep(g, {inst.oset.dir(a.orient)});
}

ConvexRegion psi_region(const Interval& a, std::size_t j, const Instance& inst) {
    return minkowski_ray(pt_region(a, inst), inst.oset.dir(j));
}

namespace {

void clip_into(std::vector<Interval>& out, const ConvexRegion& r, std::size_t next, int links,
               std::size_t orient, const Instance& inst) {
    if (auto range = region_clip_segment(r, inst.layer(next))) {
        out.push_back({next, std::move(*range), links, orient});
    }
}

}  // namespace

std::vector<Interval> plus_zero(std::span<const Interval> fam, std::size_t next, const Instance& inst) {
    std::vector<Interval> out;
    for (const Interval& a : fam) {
        clip_into(out, pt_region(a, inst), next, a.links, a.orient, inst);
    }
    return out;
}

std::vector<Interval> plus_one(std::span<const Interval> sources, std::size_t j, std::size_t next,
                               const Instance& inst) {
    std::vector<Interval> out;
    for (const Interval& a : sources) {
        clip_into(out, psi_region(a, j, inst), next, a.links + 1, j, inst);
    }
    return out;
}

std::vector<Interval> plus_two(std::span<const Interval> base, std::size_t j, std::size_t next,
                               const Instance& inst) {
    const OrientationSet& c = inst.oset;
    std::vector<Interval> out;
    for (const Interval& a : base) {
        if (a.links == 0) {
            continue;
        }
        if (a.orient != c.pred(j) && a.orient != j && a.orient != c.succ(j)) {
            const bool point = inst.layer(next).degenerate();
            return {{next, {0, point ? 0 : 1}, a.links + 2, j}};
        }
    }
    for (const Interval& a : base) {
        if (a.links == 0) {
            continue;
        }
        const std::size_t back = c.opposite(a.orient);
        clip_into(out, psi_region(a, c.succ(back), inst), next, a.links + 2, j, inst);
        clip_into(out, psi_region(a, c.pred(back), inst), next, a.links + 2, j, inst);
    }
    return out;
}

std::vector<Interval> merge_intervals(std::vector<Interval> list) {
    if (list.empty()) {
        return list;
    }
    for (const Interval& a : list) {
        if (a.seg != list[0].seg || a.links != list[0].links || a.orient != list[0].orient) {
            throw ContractViolation("merge_intervals: mixed layer, link count or orientation");
        }
    }
    std::sort(list.begin(), list.end(),
              [](const Interval& a, const Interval& b) { return a.range.lo < b.range.lo; });
    std::vector<Interval> out;
    out.push_back(std::move(list[0]));
    for (std::size_t k = 1; k < list.size(); ++k) {
        Interval& last = out.back();
        if (list[k].range.lo <= last.range.hi) {
            if (last.range.hi < list[k].range.hi) {
                last.range.hi = std::move(list[k].range.hi);
            }
        } else {
            out.push_back(std::move(list[k]));
        }
    }
    return out;
}

namespace {

using Batch = std::vector<std::vector<Interval>>;

bool any_nonempty(const Batch& b) {
    return std::any_of(b.begin(), b.end(), [](const auto& l) { return !l.empty(); });
}

void append(std::vector<Interval>& dst, std::vector<Interval> src) {
    dst.insert(dst.end(), std::make_move_iterator(src.begin()), std::make_move_iterator(src.end()));
}

OrientedIntervalFamily finish(Batch batch) {
    OrientedIntervalFamily fam(batch.size());
    for (std::size_t j = 0; j < batch.size(); ++j) {
        fam[j] = merge_intervals(std::move(batch[j]));
    }
    return fam;
}

LayerRecord initial_layer(const Instance& inst) {
    const std::size_t m = inst.oset.size();
    LayerRecord rec{0, 0, OrientedIntervalFamily(m), OrientedIntervalFamily(m)};
    for (std::size_t j = 0; j < m; ++j) {
        rec.base[j].push_back({0, {0, 0}, 0, j});
        rec.plus[j].push_back({0, {0, 0}, 1, j});
    }
    return rec;
}

LayerRecord advance(const LayerRecord& cur, const Instance& inst) {
    const std::size_t m = inst.oset.size();
    const std::size_t next = cur.index + 1;
    const int l = cur.links;
    Batch base(m);
    Batch plus(m);
    std::optional<int> fixed;

    for (std::size_t j = 0; j < m; ++j) {
        base[j] = plus_zero(cur.base[j], next, inst);
    }
    if (any_nonempty(base)) {
        fixed = l;
    }

    Batch step(m);
    for (std::size_t j = 0; j < m; ++j) {
        step[j] = plus_zero(cur.plus[j], next, inst);
        append(step[j], plus_one(cur.base.all_except(j), j, next, inst));
    }
    if (fixed) {
        plus = std::move(step);
    } else if (any_nonempty(step)) {
        fixed = l + 1;
        base = std::move(step);
    }

    if (!fixed || *fixed == l + 1) {
        const std::vector<Interval> all_base = cur.base.all();
        step.assign(m, {});
        for (std::size_t j = 0; j < m; ++j) {
            step[j] = plus_two(all_base, j, next, inst);
            append(step[j], plus_one(cur.plus.all_except(j), j, next, inst));
        }
        if (fixed) {
            plus = std::move(step);
        } else if (any_nonempty(step)) {
            fixed = l + 2;
            base = std::move(step);
        }
    }

    if (!fixed) {
        throw InternalConsistencyError("layer " + std::to_string(next) + " unreachable from layer " +
                                       std::to_string(cur.index));
    }
    if (*fixed == l + 2) {
        const bool point = inst.layer(next).degenerate();
        for (std::size_t j = 0; j < m; ++j) {
            plus[j] = {{next, {0, point ? 0 : 1}, l + 3, j}};
        }
    }
    return {next, *fixed, finish(std::move(base)), finish(std::move(plus))};
}

}  // namespace

Ledger run_stage_one(const Instance& inst) {
    Ledger ledger;
    ledger.layers.reserve(inst.n() + 2);
    ledger.layers.push_back(initial_layer(inst));
    for (std::size_t i = 0; i <= inst.n(); ++i) {
        ledger.layers.push_back(advance(ledger.layers.back(), inst));
    }
    return ledger;
}

}  // namespace minlink

#include "minlink/interval.hpp"

#include <algorithm>

namespace minlink {

bool OrientedIntervalFamily::empty() const {
    return std::all_of(by_orient.begin(), by_orient.end(), [](const auto& l) { return l.empty(); });
}

std::size_t OrientedIntervalFamily::total() const {
    std::size_t n = 0;
    for (const auto& l : by_orient) {
        n += l.size();
    }
    return n;
}

std::size_t OrientedIntervalFamily::max_list() const {
    std::size_t n = 0;
    for (const auto& l : by_orient) {
        n = std::max(n, l.size());
    }
    return n;
}

std::vector<Interval> OrientedIntervalFamily::all() const {
    std::vector<Interval> out;
    for (const auto& l : by_orient) {
        out.insert(out.end(), l.begin(), l.end());
    }
    return out;
}

std::vector<Interval> OrientedIntervalFamily::all_except(std::size_t j) const {
    std::vector<Interval> out;
    for (std::size_t k = 0; k < by_orient.size(); ++k) {
        if (k != j) {
            out.insert(out.end(), by_orient[k].begin(), by_orient[k].end());
        }
    }
    return out;
}

std::size_t Ledger::max_family_size() const {
    std::size_t n = 0;
    for (const auto& layer : layers) {
        n = std::max({n, layer.base.max_list(), layer.plus.max_list()});
    }
    return n;
}

SegmentGeom interval_geom(const Interval& a, const Instance& inst) {
    return inst.layer(a.seg).sub(a.range);
}

std::pair<Point, Point> endpoint_roles(const Interval& a, const Instance& inst) {
    const SegmentGeom g = interval_geom(a, inst);
    const Direction& c = inst.oset.dir(a.orient);
    switch (side_of(c, g.q - g.p)) {
        case Side::right:
            return {g.p, g.q};
        case Side::left:
            return {g.q, g.p};
        case Side::collinear:
            break;
    }
    // Moving along c, the trailing endpoint is met first.
    if (dot(c.vec(), g.q - g.p).sign() >= 0) {
        return {g.p, g.q};
    }
    return {g.q, g.p};
}

bool interval_contains(const Interval& a, const Instance& inst, const Point& p) {
    return interval_geom(a, inst).contains(p);
}

}  // namespace minlink

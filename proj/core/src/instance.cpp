#include "minlink/instance.hpp"

#include <algorithm>
#include <sstream>

#include "minlink/region.hpp"

namespace minlink {

namespace {

std::string describe(const ValidationReport& report) {
    std::ostringstream os;
    os << "invalid instance:";
    for (const auto& v : report.violations) {
        os << ' ' << v.code;
        if (!v.location.empty()) {
            os << " at " << v.location;
        }
        os << ';';
    }
    return os.str();
}

std::string seg_loc(std::size_t i) { return "segments[" + std::to_string(i) + "]"; }

}  // namespace

InvalidInstance::InvalidInstance(ValidationReport report)
    : std::invalid_argument(describe(report)), report_(std::move(report)) {}

SegmentGeom Instance::layer(std::size_t i) const {
    if (i == 0) {
        return {s, s};
    }
    if (i == segments.size() + 1) {
        return {t, t};
    }
    return segments.at(i - 1).geom;
}

std::optional<std::size_t> segment_orientation_index(const SegmentGeom& seg, const OrientationSet& oset) {
    if (seg.degenerate()) {
        return std::nullopt;
    }
    if (auto j = oset.index_along(seg.delta())) {
        return j;
    }
    return oset.index_along(-seg.delta());
}

std::optional<Point> segment_intersection_point(const SegmentGeom& a, const SegmentGeom& b) {
    const auto r = region_clip_segment(ConvexRegion::sweep(a, {}), b);
    if (!r) {
        return std::nullopt;
    }
    return b.at(r->lo);
}

ValidationReport validate_instance(const OrientationSet& oset, const Point& s, const Point& t,
                                   std::span<const SegmentGeom> segments, bool with_notes) {
    ValidationReport report;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const SegmentGeom& e = segments[i];
        if (e.degenerate()) {
            report.add("degenerate-segment", "segment endpoints coincide", seg_loc(i));
            continue;
        }
        if (!segment_orientation_index(e, oset)) {
            report.add("non-c-oriented-segment", "segment orientation is not in C", seg_loc(i));
        }
        if (e.contains(s)) {
            report.add("s-on-segment", "s lies on a segment", seg_loc(i));
        }
        if (e.contains(t)) {
            report.add("t-on-segment", "t lies on a segment", seg_loc(i));
        }
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const std::size_t last = with_notes ? segments.size() : std::min(segments.size(), i + 2);
        for (std::size_t k = i + 1; k < last; ++k) {
            const auto hit = segment_intersection_point(segments[i], segments[k]);
            if (!hit) {
                continue;
            }
            std::ostringstream os;
            os << seg_loc(i) << " x " << seg_loc(k) << " at " << *hit;
            if (k == i + 1) {
                report.add("consecutive-intersection", "consecutive segments intersect", os.str());
            } else {
                report.notes.push_back({"non-consecutive-intersection", "segments intersect", os.str()});
            }
        }
    }
    return report;
}

ValidationReport validate_instance(const Instance& inst, bool with_notes) {
    std::vector<SegmentGeom> geoms;
    geoms.reserve(inst.segments.size());
    for (const auto& e : inst.segments) {
        geoms.push_back(e.geom);
    }
    ValidationReport report = validate_instance(inst.oset, inst.s, inst.t, geoms, with_notes);
    for (std::size_t i = 0; i < inst.segments.size(); ++i) {
        const Segment& e = inst.segments[i];
        if (e.orient >= inst.oset.size() || !points_along(e.geom.delta(), inst.oset.dir(e.orient))) {
            report.add("bad-orientation-index", "stored orientation index does not match geometry", seg_loc(i));
        }
    }
    return report;
}

Instance make_instance(OrientationSet oset, Point s, Point t, std::span<const SegmentGeom> segments) {
    ValidationReport report = validate_instance(oset, s, t, segments, false);
    if (!report.ok()) {
        throw InvalidInstance(std::move(report));
    }
    Instance inst{std::move(oset), std::move(s), std::move(t), {}};
    inst.segments.reserve(segments.size());
    for (const SegmentGeom& e : segments) {
        inst.segments.push_back({e, *inst.oset.index_along(e.delta())});
    }
    return inst;
}

}  // namespace minlink

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "minlink/geometry.hpp"
#include "minlink/orientation.hpp"
#include "minlink/report.hpp"

namespace minlink {

struct Segment {
    SegmentGeom geom;
    std::size_t orient = 0;  ///< index into the orientation set; geom.q - geom.p points along it

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// A problem instance: orientations, endpoints s and t, and the ordered segments e_1..e_n.
struct Instance {
    OrientationSet oset;
    Point s;
    Point t;
    std::vector<Segment> segments;

    std::size_t n() const { return segments.size(); }
    /// Layer geometry: 0 is s, 1..n are the segments, n+1 is t (as point-segments).
    SegmentGeom layer(std::size_t i) const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

class InvalidInstance : public std::invalid_argument {
public:
    explicit InvalidInstance(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Index of the orientation matching q - p, else p - q.
std::optional<std::size_t> segment_orientation_index(const SegmentGeom& seg, const OrientationSet& oset);

/// Violation codes: degenerate-segment, non-c-oriented-segment, s-on-segment,
/// t-on-segment, consecutive-intersection. Non-consecutive intersections are notes.
/// `with_notes` enables the quadratic scan for non-consecutive crossings.
ValidationReport validate_instance(const OrientationSet& oset, const Point& s, const Point& t,
                                   std::span<const SegmentGeom> segments, bool with_notes = true);
ValidationReport validate_instance(const Instance& inst, bool with_notes = true);

/// Builds a validated instance; throws InvalidInstance.
Instance make_instance(OrientationSet oset, Point s, Point t, std::span<const SegmentGeom> segments);

/// First common point of two segments, if they intersect.
std::optional<Point> segment_intersection_point(const SegmentGeom& a, const SegmentGeom& b);

}  // namespace minlink

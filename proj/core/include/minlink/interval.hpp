#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "minlink/geometry.hpp"
#include "minlink/instance.hpp"

namespace minlink {

/// Raised when the ledger and the recovery disagree, or a layer comes out empty.
class InternalConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A closed interval on layer `seg`, reached by paths of `links` links whose
/// last link has orientation `orient`.
struct Interval {
    std::size_t seg = 0;
    ParamRange range{0, 0};
    int links = 0;
    std::size_t orient = 0;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Per-orientation sorted, pairwise disjoint interval lists.
struct OrientedIntervalFamily {
    std::vector<std::vector<Interval>> by_orient;

    OrientedIntervalFamily() = default;
    explicit OrientedIntervalFamily(std::size_t m) : by_orient(m) {}

    const std::vector<Interval>& operator[](std::size_t j) const { return by_orient[j]; }
    std::vector<Interval>& operator[](std::size_t j) { return by_orient[j]; }
    std::size_t orientations() const { return by_orient.size(); }

    bool empty() const;
    std::size_t total() const;
    std::size_t max_list() const;
    /// Every interval, grouped by ascending orientation.
    std::vector<Interval> all() const;
    /// Every interval whose orientation differs from j.
    std::vector<Interval> all_except(std::size_t j) const;

    friend bool operator==(const OrientedIntervalFamily&, const OrientedIntervalFamily&) = default;
};

struct LayerRecord {
    std::size_t index = 0;
    int links = 0;                ///< l(e_i)
    OrientedIntervalFamily base;  ///< I(e_i, .), length l(e_i)
    OrientedIntervalFamily plus;  ///< I+(e_i, .), length l(e_i) + 1

    friend bool operator==(const LayerRecord&, const LayerRecord&) = default;
};

/// Stage I output: layers 0..n+1 (s, e_1..e_n, t).
struct Ledger {
    std::vector<LayerRecord> layers;

    const LayerRecord& operator[](std::size_t i) const { return layers[i]; }
    std::size_t size() const { return layers.size(); }
    int final_links() const { return layers.back().links; }
    /// Largest per-orientation list over all layers and both families.
    std::size_t max_family_size() const;
};

/// Endpoints (a_1, a_2) of an interval in the order seen when approaching it
/// along its orientation: a_2 lies to the right of a_1. When the orientation
/// runs along the segment, a_1 is the trailing endpoint.
std::pair<Point, Point> endpoint_roles(const Interval& a, const Instance& inst);

/// Geometry of the interval on its layer segment.
SegmentGeom interval_geom(const Interval& a, const Instance& inst);

bool interval_contains(const Interval& a, const Instance& inst, const Point& p);

}  // namespace minlink

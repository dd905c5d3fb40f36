#pragma once

#include <optional>
#include <span>
#include <vector>

#include "minlink/geometry.hpp"

namespace minlink {

enum class RegionShape { full_dim, segment_like, line_like, ray_like, point_like };

const char* to_string(RegionShape s);

/// The convex cone spanned by a set of directions, classified by shape.
struct Cone {
    enum class Kind { zero, ray, line, wedge, half_plane, plane };

    Kind kind = Kind::zero;
    /// Extreme rays: `ray`/`line` use first; `wedge` spans counter-clockwise
    /// from first to second; `half_plane` has boundary along first.
    std::optional<Direction> first;
    std::optional<Direction> second;
    /// Inward normal of a `half_plane` cone.
    std::optional<Vector> inward;

    static Cone of(std::span<const Direction> dirs);
};

/// A closed convex region of the form base (+) cone(dirs): a segment or point
/// swept by every non-negative combination of the given directions. Stored both
/// as its generator and as an intersection of at most four closed half-planes.
/// An empty half-plane list is the whole plane.
class ConvexRegion {
public:
    static ConvexRegion sweep(const SegmentGeom& base, std::vector<Direction> dirs);
    static ConvexRegion point(const Point& p) { return sweep({p, p}, {}); }

    /// Minkowski sum with the closed ray in direction d.
    ConvexRegion swept(const Direction& d) const;

    const std::vector<HalfPlane>& halfplanes() const { return halfplanes_; }
    RegionShape shape() const { return shape_; }
    const SegmentGeom& base() const { return base_; }
    const std::vector<Direction>& cone() const { return dirs_; }
    bool is_plane() const { return halfplanes_.empty(); }
    bool contains(const Point& p) const;

private:
    SegmentGeom base_;
    std::vector<Direction> dirs_;
    std::vector<HalfPlane> halfplanes_;
    RegionShape shape_ = RegionShape::point_like;
};

ConvexRegion minkowski_ray(const ConvexRegion& r, const Direction& d);

std::optional<ParamRange> region_clip_segment(const ConvexRegion& r, const SegmentGeom& seg);

/// Parameter range {t >= 0 : origin + t*d in r}; `hi` absent when unbounded.
struct RayRange {
    Rational lo;
    std::optional<Rational> hi;
};

std::optional<RayRange> clip_ray(const Point& origin, const Direction& d, const ConvexRegion& r);

/// Point of Ray(origin, d) inside r that is closest to origin.
std::optional<Point> first_point_on_ray(const Point& origin, const Direction& d, const ConvexRegion& r);

/// Parameter range of `seg` covered by the closed ray; the whole overlap when collinear.
std::optional<ParamRange> ray_segment_intersection(const Point& origin, const Direction& d,
                                                   const SegmentGeom& seg);

}  // namespace minlink

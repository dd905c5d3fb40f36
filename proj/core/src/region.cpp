#include "minlink/region.hpp"

#include <algorithm>

namespace minlink {

const char* to_string(RegionShape s) {
    switch (s) {
        case RegionShape::full_dim: return "full_dim";
        case RegionShape::segment_like: return "segment_like";
        case RegionShape::line_like: return "line_like";
        case RegionShape::ray_like: return "ray_like";
        case RegionShape::point_like: return "point_like";
    }
    return "?";
}

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2*pi).
int half_of(const Direction& d) { return (d.dy() < 0 || (d.dy() == 0 && d.dx() < 0)) ? 1 : 0; }

bool ccw_less(const Direction& a, const Direction& b) {
    const int ha = half_of(a);
    const int hb = half_of(b);
    if (ha != hb) {
        return ha < hb;
    }
    return cross(a, b) > 0;
}

Vector perp(const Vector& v) { return {-v.y, v.x}; }

}  // namespace

Cone Cone::of(std::span<const Direction> dirs) {
    std::vector<Direction> s(dirs.begin(), dirs.end());
    std::sort(s.begin(), s.end(), ccw_less);
    s.erase(std::unique(s.begin(), s.end()), s.end());

    Cone cone;
    if (s.empty()) {
        return cone;
    }
    if (s.size() == 1) {
        cone.kind = Kind::ray;
        cone.first = s[0];
        return cone;
    }
    std::size_t straight_gaps = 0;
    std::optional<std::size_t> straight_at;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const Direction& u = s[k];
        const Direction& v = s[(k + 1) % s.size()];
        const std::int64_t cr = cross(u, v);
        if (cr < 0) {
            // The empty arc from u to v exceeds a half-turn: a pointed wedge from v round to u.
            cone.kind = Kind::wedge;
            cone.first = v;
            cone.second = u;
            return cone;
        }
        if (cr == 0) {
            ++straight_gaps;
            straight_at = k;
        }
    }
    if (straight_gaps == 0) {
        cone.kind = Kind::plane;
        return cone;
    }
    if (s.size() == 2) {
        cone.kind = Kind::line;
        cone.first = s[0];
        return cone;
    }
    const Direction& v = s[(*straight_at + 1) % s.size()];
    cone.kind = Kind::half_plane;
    cone.first = v;
    cone.inward = perp(v.vec());
    return cone;
}

ConvexRegion ConvexRegion::sweep(const SegmentGeom& base, std::vector<Direction> dirs) {
    ConvexRegion r;
    r.base_ = base;
    r.dirs_ = std::move(dirs);
    const Cone cone = Cone::of(r.dirs_);

    std::vector<Vector> normals;
    const bool point_base = base.degenerate();
    const Vector bd = base.delta();
    auto add_base_normals_if = [&](auto&& in_dual) {
        if (point_base) {
            return;
        }
        for (const Vector& n : {perp(bd), -perp(bd)}) {
            if (in_dual(n)) {
                normals.push_back(n);
            }
        }
    };

    switch (cone.kind) {
        case Cone::Kind::zero:
            if (point_base) {
                normals = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
                r.shape_ = RegionShape::point_like;
            } else {
                normals = {perp(bd), -perp(bd), bd, -bd};
                r.shape_ = RegionShape::segment_like;
            }
            break;
        case Cone::Kind::ray: {
            const Vector d = cone.first->vec();
            normals = {perp(d), -perp(d), d};
            add_base_normals_if([&](const Vector& n) { return dot(n, d).sign() > 0; });
            const bool flat = point_base || cross(bd, d).is_zero();
            r.shape_ = flat ? RegionShape::ray_like : RegionShape::full_dim;
            break;
        }
        case Cone::Kind::line: {
            const Vector d = cone.first->vec();
            normals = {perp(d), -perp(d)};
            const bool flat = point_base || cross(bd, d).is_zero();
            r.shape_ = flat ? RegionShape::line_like : RegionShape::full_dim;
            break;
        }
        case Cone::Kind::wedge: {
            const Vector r1 = cone.first->vec();
            const Vector r2 = cone.second->vec();
            Vector m1 = perp(r1);
            if (dot(m1, r2).sign() < 0) {
                m1 = -m1;
            }
            Vector m2 = perp(r2);
            if (dot(m2, r1).sign() < 0) {
                m2 = -m2;
            }
            normals = {m1, m2};
            add_base_normals_if([&](const Vector& n) {
                return dot(n, r1).sign() > 0 && dot(n, r2).sign() > 0;
            });
            r.shape_ = RegionShape::full_dim;
            break;
        }
        case Cone::Kind::half_plane:
            normals = {*cone.inward};
            r.shape_ = RegionShape::full_dim;
            break;
        case Cone::Kind::plane:
            r.shape_ = RegionShape::full_dim;
            break;
    }

    r.halfplanes_.reserve(normals.size());
    for (const Vector& n : normals) {
        const Rational hp = dot(n, base.p - Point{0, 0});
        const Rational hq = dot(n, base.q - Point{0, 0});
        r.halfplanes_.push_back(HalfPlane{n.x, n.y, -min(hp, hq)});
    }
    return r;
}

ConvexRegion ConvexRegion::swept(const Direction& d) const {
    std::vector<Direction> dirs = dirs_;
    if (std::find(dirs.begin(), dirs.end(), d) == dirs.end()) {
        dirs.push_back(d);
    }
    return sweep(base_, std::move(dirs));
}

bool ConvexRegion::contains(const Point& p) const {
    return std::all_of(halfplanes_.begin(), halfplanes_.end(),
                       [&](const HalfPlane& h) { return h.contains(p); });
}

ConvexRegion minkowski_ray(const ConvexRegion& r, const Direction& d) { return r.swept(d); }

std::optional<ParamRange> region_clip_segment(const ConvexRegion& r, const SegmentGeom& seg) {
    ParamRange acc = seg.degenerate() ? ParamRange{0, 0} : ParamRange{0, 1};
    for (const HalfPlane& h : r.halfplanes()) {
        const auto part = clip_segment_by_halfplane(seg, h);
        if (!part) {
            return std::nullopt;
        }
        acc.lo = max(acc.lo, part->lo);
        acc.hi = min(acc.hi, part->hi);
        if (acc.hi < acc.lo) {
            return std::nullopt;
        }
    }
    return acc;
}

std::optional<RayRange> clip_ray(const Point& origin, const Direction& d, const ConvexRegion& r) {
    RayRange acc{0, std::nullopt};
    const Vector v = d.vec();
    for (const HalfPlane& h : r.halfplanes()) {
        const Rational f0 = h.eval(origin);
        const Rational df = h.a * v.x + h.b * v.y;
        if (df.is_zero()) {
            if (f0.sign() < 0) {
                return std::nullopt;
            }
            continue;
        }
        const Rational root = -f0 / df;
        if (df.sign() > 0) {
            acc.lo = max(acc.lo, root);
        } else if (!acc.hi || root < *acc.hi) {
            acc.hi = root;
        }
        if (acc.hi && *acc.hi < acc.lo) {
            return std::nullopt;
        }
    }
    return acc;
}

std::optional<Point> first_point_on_ray(const Point& origin, const Direction& d, const ConvexRegion& r) {
    const auto range = clip_ray(origin, d, r);
    if (!range) {
        return std::nullopt;
    }
    return origin + range->lo * d.vec();
}

std::optional<ParamRange> ray_segment_intersection(const Point& origin, const Direction& d,
                                                   const SegmentGeom& seg) {
    return region_clip_segment(ConvexRegion::sweep({origin, origin}, {d}), seg);
}

}  // namespace minlink

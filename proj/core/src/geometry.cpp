#include "minlink/geometry.hpp"

#include <numeric>

namespace minlink {

Direction::Direction(std::int64_t dx, std::int64_t dy) {
    if (dx == 0 && dy == 0) {
        throw GeometryError("invalid direction: zero vector");
    }
    const std::int64_t g = std::gcd(dx, dy);
    dx_ = dx / g;
    dy_ = dy / g;
}

bool points_along(const Vector& v, const Direction& d) {
    const Vector w = d.vec();
    return cross(w, v).is_zero() && dot(w, v).sign() > 0;
}

Side side_of(const Direction& d, const Vector& v) {
    const int s = cross(d.vec(), v).sign();
    if (s > 0) {
        return Side::left;
    }
    return s < 0 ? Side::right : Side::collinear;
}

Rational SegmentGeom::param_of(const Point& pt) const {
    if (degenerate()) {
        return Rational(0);
    }
    const Vector d = delta();
    return dot(pt - p, d) / dot(d, d);
}

bool SegmentGeom::contains(const Point& pt) const {
    if (degenerate()) {
        return pt == p;
    }
    if (!cross(delta(), pt - p).is_zero()) {
        return false;
    }
    const Rational t = param_of(pt);
    return t.sign() >= 0 && t <= Rational(1);
}

std::optional<ParamRange> clip_segment_by_halfplane(const SegmentGeom& seg, const HalfPlane& hp) {
    const Rational f0 = hp.eval(seg.p);
    if (seg.degenerate()) {
        if (f0.sign() < 0) {
            return std::nullopt;
        }
        return ParamRange{0, 0};
    }
    const Vector d = seg.delta();
    const Rational df = hp.a * d.x + hp.b * d.y;
    // f(t) = f0 + t * df >= 0 on t in [0, 1]
    if (df.is_zero()) {
        if (f0.sign() < 0) {
            return std::nullopt;
        }
        return ParamRange{0, 1};
    }
    const Rational root = -f0 / df;
    ParamRange r{0, 1};
    if (df.sign() > 0) {
        r.lo = max(r.lo, root);
    } else {
        r.hi = min(r.hi, root);
    }
    if (r.hi < r.lo) {
        return std::nullopt;
    }
    return r;
}

}  // namespace minlink

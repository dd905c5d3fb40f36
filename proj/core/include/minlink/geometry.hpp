#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "minlink/rational.hpp"

namespace minlink {

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Vector {
    Rational x;
    Rational y;

    friend bool operator==(const Vector&, const Vector&) = default;
    Vector operator-() const { return {-x, -y}; }
    friend Vector operator*(const Rational& k, const Vector& v) { return {k * v.x, k * v.y}; }
    friend Vector operator+(const Vector& a, const Vector& b) { return {a.x + b.x, a.y + b.y}; }
};

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
    friend Vector operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator+(const Point& p, const Vector& v) { return {p.x + v.x, p.y + v.y}; }
    friend std::ostream& operator<<(std::ostream& os, const Point& p) {
        return os << '(' << p.x << ", " << p.y << ')';
    }
};

inline Rational cross(const Vector& a, const Vector& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vector& a, const Vector& b) { return a.x * b.x + a.y * b.y; }

/// A directed orientation, stored as a primitive integer vector.
class Direction {
public:
    /// Throws GeometryError for the zero vector.
    Direction(std::int64_t dx, std::int64_t dy);

    std::int64_t dx() const { return dx_; }
    std::int64_t dy() const { return dy_; }
    Vector vec() const { return {Rational(static_cast<long>(dx_)), Rational(static_cast<long>(dy_))}; }
    Direction operator-() const { return Direction(-dx_, -dy_); }

    friend bool operator==(const Direction&, const Direction&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Direction& d) {
        return os << '<' << d.dx_ << ',' << d.dy_ << '>';
    }

private:
    std::int64_t dx_;
    std::int64_t dy_;
};

inline Direction normalize_direction(std::int64_t dx, std::int64_t dy) { return Direction(dx, dy); }

/// Integer cross product of two directions; exact for the small vectors used as orientations.
inline std::int64_t cross(const Direction& a, const Direction& b) {
    return a.dx() * b.dy() - a.dy() * b.dx();
}
inline std::int64_t dot(const Direction& a, const Direction& b) {
    return a.dx() * b.dx() + a.dy() * b.dy();
}

/// Strict "same way" test for a rational vector against a direction.
bool points_along(const Vector& v, const Direction& d);

enum class Side { left, right, collinear };

/// Side of `v` relative to travel direction `d`: left when d x v > 0.
Side side_of(const Direction& d, const Vector& v);

/// Closed sub-range [lo, hi] of [0, 1].
struct ParamRange {
    Rational lo;
    Rational hi;

    bool is_point() const { return lo == hi; }
    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
    bool contains(const ParamRange& o) const { return lo <= o.lo && o.hi <= hi; }
    friend bool operator==(const ParamRange&, const ParamRange&) = default;
    friend std::ostream& operator<<(std::ostream& os, const ParamRange& r) {
        return os << '[' << r.lo << ", " << r.hi << ']';
    }
};

/// Segment from p to q; p == q models a point-segment.
struct SegmentGeom {
    Point p;
    Point q;

    bool degenerate() const { return p == q; }
    Vector delta() const { return q - p; }
    Point at(const Rational& t) const { return p + t * delta(); }

    /// Parameter of a point known to lie on the carrier line.
    Rational param_of(const Point& pt) const;
    bool contains(const Point& pt) const;

    /// The sub-segment covered by `r`.
    SegmentGeom sub(const ParamRange& r) const { return {at(r.lo), at(r.hi)}; }

    friend bool operator==(const SegmentGeom&, const SegmentGeom&) = default;
};

/// Closed half-plane {(x, y) : a*x + b*y + c >= 0}.
struct HalfPlane {
    Rational a;
    Rational b;
    Rational c;

    Rational eval(const Point& p) const { return a * p.x + b * p.y + c; }
    bool contains(const Point& p) const { return eval(p).sign() >= 0; }
    friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

/// Closed sub-range of `seg` inside `hp`.
std::optional<ParamRange> clip_segment_by_halfplane(const SegmentGeom& seg, const HalfPlane& hp);

}  // namespace minlink

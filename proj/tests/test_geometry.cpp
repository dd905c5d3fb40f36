#include <doctest.h>

#include <random>

#include "minlink/geometry.hpp"
#include "minlink/region.hpp"

using namespace minlink;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

HalfPlane x_at_least(long v) { return {1, 0, -v}; }
HalfPlane y_at_least(long v) { return {0, 1, -v}; }

// {0 <= x <= 2, y >= 0}
ConvexRegion north_slab() { return ConvexRegion::sweep({{0, 0}, {2, 0}}, {Direction(0, 1)}); }

bool same_set(const ConvexRegion& a, const std::vector<HalfPlane>& hps, long lo = -6, long hi = 6) {
    for (long x = lo; x <= hi; ++x) {
        for (long y = lo; y <= hi; ++y) {
            for (const Rational& dx : {Rational(0), q("1/2")}) {
                const Point p{Rational(x) + dx, Rational(y) + dx};
                bool in_b = true;
                for (const HalfPlane& h : hps) {
                    in_b &= h.contains(p);
                }
                if (a.contains(p) != in_b) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("rational") {
    TEST_CASE("reduced form and parsing") {
        CHECK(q("4/6") == q("2/3"));
        CHECK(q("-3/6").str() == "-1/2");
        CHECK_THROWS_AS(q("3/-6"), std::invalid_argument);
        CHECK(q("5").str() == "5");
        CHECK(q("10/5").is_integer());
        CHECK_THROWS_AS(q("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(q("x"), std::invalid_argument);
        CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    }

    TEST_CASE("ordering") {
        CHECK(q("1/3") < q("1/2"));
        CHECK(q("-1/2") < Rational(0));
        CHECK(min(q("1/3"), q("1/4")) == q("1/4"));
    }
}

TEST_SUITE("directions") {
    TEST_CASE("normalize_direction") {
        CHECK(normalize_direction(4, -2) == Direction(2, -1));
        CHECK(normalize_direction(4, -2).dx() == 2);
        CHECK(normalize_direction(0, 5).dy() == 1);
        CHECK(normalize_direction(-3, 0).dx() == -1);
        CHECK_THROWS_AS(normalize_direction(0, 0), GeometryError);
    }

    TEST_CASE("side_of") {
        CHECK(side_of(Direction(1, 0), {0, 1}) == Side::left);
        CHECK(side_of(Direction(1, 0), {0, -1}) == Side::right);
        CHECK(side_of(Direction(1, 0), {2, 0}) == Side::collinear);
    }

    TEST_CASE("side_of is exact") {
        // The cross product here is 1/10^12; a tolerance would call it collinear.
        const Vector v{q("1000000"), q("1000001/1000000")};
        CHECK(side_of(Direction(1000000, 1), v) == Side::left);
    }
}

TEST_SUITE("clipping") {
    TEST_CASE("ray_segment_intersection") {
        CHECK_FALSE(ray_segment_intersection({4, 0}, Direction(0, 1), {{2, 1}, {2, 3}}));
        CHECK(ray_segment_intersection({1, 0}, Direction(0, 1), {{0, 2}, {2, 2}}) == ParamRange{q("1/2"), q("1/2")});
        CHECK(ray_segment_intersection({0, 0}, Direction(0, 1), {{0, 1}, {0, 3}}) == ParamRange{0, 1});
        CHECK_FALSE(ray_segment_intersection({0, 0}, Direction(0, -1), {{0, 1}, {0, 3}}));
        CHECK(ray_segment_intersection({0, 2}, Direction(0, 1), {{0, 1}, {0, 3}}) == ParamRange{q("1/2"), 1});
    }

    TEST_CASE("clip_segment_by_halfplane") {
        const SegmentGeom s{{0, 0}, {4, 0}};
        CHECK(clip_segment_by_halfplane(s, x_at_least(2)) == ParamRange{q("1/2"), 1});
        CHECK_FALSE(clip_segment_by_halfplane(s, y_at_least(1)));
        CHECK(clip_segment_by_halfplane(s, y_at_least(0)) == ParamRange{0, 1});
    }

    TEST_CASE("region_clip_segment") {
        CHECK(region_clip_segment(north_slab(), {{q("1/2"), 3}, {q("3/2"), 3}}) == ParamRange{0, 1});
        const ConvexRegion quadrant = ConvexRegion::sweep({{0, 0}, {0, 0}}, {Direction(1, 0), Direction(0, 1)});
        CHECK(region_clip_segment(quadrant, {{-1, 1}, {1, 1}}) == ParamRange{q("1/2"), 1});
        const ConvexRegion ray = ConvexRegion::sweep({{2, 1}, {2, 1}}, {Direction(0, 1)});
        CHECK(ray.shape() == RegionShape::ray_like);
        CHECK(region_clip_segment(ray, {{0, 2}, {4, 2}}) == ParamRange{q("1/2"), q("1/2")});
    }

    TEST_CASE("first_point_on_ray") {
        CHECK(first_point_on_ray({4, 0}, Direction(0, 1), ConvexRegion::sweep({{2, 1}, {2, 3}}, {Direction(1, 0)})) ==
              Point{4, 1});
        CHECK_FALSE(first_point_on_ray({4, 0}, Direction(0, -1), north_slab()));
    }
}

TEST_SUITE("regions") {
    TEST_CASE("shapes") {
        CHECK(ConvexRegion::point({1, 1}).shape() == RegionShape::point_like);
        CHECK(ConvexRegion::sweep({{0, 0}, {1, 0}}, {}).shape() == RegionShape::segment_like);
        CHECK(ConvexRegion::sweep({{2, 1}, {2, 3}}, {Direction(0, 1)}).shape() == RegionShape::ray_like);
        CHECK(ConvexRegion::sweep({{0, 0}, {0, 0}}, {Direction(0, 1), Direction(0, -1)}).shape() ==
              RegionShape::line_like);
        CHECK(north_slab().shape() == RegionShape::full_dim);
        CHECK(north_slab().halfplanes().size() <= 4);
    }

    TEST_CASE("minkowski_ray") {
        CHECK(same_set(minkowski_ray(north_slab(), Direction(1, 0)), {x_at_least(0), y_at_least(0)}));
        CHECK(same_set(minkowski_ray(north_slab(), Direction(0, -1)), {x_at_least(0), {-1, 0, 2}}));
        CHECK(same_set(minkowski_ray(north_slab(), Direction(0, 1)), {x_at_least(0), {-1, 0, 2}, y_at_least(0)}));
    }

    TEST_CASE("a diagonal sweep keeps the base edge") {
        // Vertical segment swept south-east: bounded by the segment's line, the
        // top ray and the bottom ray; none of these can be dropped.
        const ConvexRegion r = ConvexRegion::sweep({{0, 0}, {0, 2}}, {Direction(1, -1)});
        CHECK(r.contains({1, 1}));
        CHECK(r.contains({3, -3}));
        CHECK_FALSE(r.contains({1, 2}));
        CHECK_FALSE(r.contains({-1, 0}));
        CHECK_FALSE(r.contains({1, -2}));
    }

    TEST_CASE("monotone, idempotent and sound clipping on random regions") {
        std::mt19937 rng(5);
        const std::vector<Direction> dirs{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
        auto coord = [&] { return Rational(static_cast<long>(rng() % 9) - 4); };
        for (int trial = 0; trial < 300; ++trial) {
            const SegmentGeom base{{coord(), coord()}, {coord(), coord()}};
            std::vector<Direction> cone;
            for (std::size_t k = rng() % 3; k > 0; --k) {
                cone.push_back(dirs[rng() % dirs.size()]);
            }
            const ConvexRegion r = ConvexRegion::sweep(base, cone);
            const Direction d = dirs[rng() % dirs.size()];
            const ConvexRegion s = minkowski_ray(r, d);
            for (const Point& p : {base.p, base.q, base.at(Rational(1, 2))}) {
                REQUIRE(r.contains(p));
                CHECK(s.contains(p));
                CHECK(s.contains(p + Rational(3) * d.vec()));
            }
            CHECK(same_set(minkowski_ray(s, d), s.halfplanes()));

            const SegmentGeom seg{{coord(), coord()}, {coord(), coord()}};
            if (const auto range = region_clip_segment(s, seg)) {
                for (int k = 0; k <= 4; ++k) {
                    const Rational u = range->lo + (range->hi - range->lo) * Rational(k, 4);
                    CHECK(s.contains(seg.at(u)));
                }
            }
        }
    }
}

#include "minlink/generate.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include "minlink/io.hpp"

namespace minlink {

namespace {

constexpr std::array<std::pair<std::int64_t, std::int64_t>, 8> kHalf{{
    {1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1},
}};

// Uniform draw from [0, span) by rejection; avoids the implementation-defined
// behaviour of std::uniform_int_distribution so output is identical everywhere.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t span) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % span;
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

Point draw_point(std::mt19937_64& rng, std::int64_t b) {
    return {Rational(static_cast<long>(draw(rng, -b, b))), Rational(static_cast<long>(draw(rng, -b, b)))};
}

}  // namespace

OrientationSet canonical_orientations(std::size_t c_size) {
    if (c_size < 4 || c_size % 2 != 0 || c_size / 2 > kHalf.size()) {
        throw std::invalid_argument("orientation set size must be even and between 4 and 16");
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    for (std::size_t k = 0; k < c_size / 2; ++k) {
        raw.push_back(kHalf[k]);
        raw.emplace_back(-kHalf[k].first, -kHalf[k].second);
    }
    return OrientationSet::build(raw);
}

Instance generate_instance(const GenParams& params) {
    if (params.bound < 2) {
        throw std::invalid_argument("coordinate bound must be at least 2");
    }
    OrientationSet oset = canonical_orientations(params.c_size);
    std::mt19937_64 rng(params.seed);
    const std::int64_t b = params.bound;
    const Point s = draw_point(rng, b);
    const Point t = draw_point(rng, b);
    const std::int64_t max_len = std::max<std::int64_t>(1, b / 4);

    std::vector<SegmentGeom> segs;
    segs.reserve(params.n);
    std::size_t failures = 0;
    while (segs.size() < params.n) {
        if (++failures > 100000 + 1000 * params.n) {
            throw std::invalid_argument("could not place segments; coordinate bound too small");
        }
        const auto [dx, dy] = kHalf[below(rng, params.c_size / 2)];
        const Point p = draw_point(rng, b);
        const std::int64_t len = draw(rng, 1, max_len);
        const Point q{p.x + Rational(static_cast<long>(dx * len)), p.y + Rational(static_cast<long>(dy * len))};
        if (q.x > Rational(static_cast<long>(b)) || q.y > Rational(static_cast<long>(b)) ||
            q.y < Rational(static_cast<long>(-b))) {
            continue;
        }
        const SegmentGeom e{p, q};
        if (e.contains(s) || e.contains(t)) {
            continue;
        }
        if (!segs.empty() && segment_intersection_point(segs.back(), e)) {
            continue;
        }
        segs.push_back(e);
    }
    return make_instance(std::move(oset), s, t, segs);
}

std::string generate_command(const GenParams& params) { return emit_instance(generate_instance(params)); }

}  // namespace minlink

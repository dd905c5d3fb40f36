#pragma once

#include <cstddef>
#include <vector>

#include "minlink/geometry.hpp"
#include "minlink/instance.hpp"
#include "minlink/interval.hpp"

namespace minlink {

struct VisitPoint {
    std::size_t segment = 0;  ///< 1-based segment index
    Point point;

    friend bool operator==(const VisitPoint&, const VisitPoint&) = default;
};

/// A C-oriented polyline from s to t with its witness points p_1..p_n.
struct Tour {
    std::vector<Point> vertices;
    std::vector<VisitPoint> visits;
    int link_count = 0;

    friend bool operator==(const Tour&, const Tour&) = default;
};

struct SubPath {
    Interval b;                ///< interval on layer i-1 the subpath lands in
    Point landing;             ///< p', the landing point in b
    std::vector<Point> path;   ///< p ... p', with l_a - l_b + 1 links (zero-length links allowed)
};

/// One backward step from p in interval a on layer i to layer i-1.
/// Throws InternalConsistencyError when no branch applies.
SubPath recover_subpath(const Ledger& ledger, const Instance& inst, std::size_t i, const Interval& a,
                        const Point& p);

/// Stage II: walks back from t and returns the simplified tour.
Tour run_stage_two(const Ledger& ledger, const Instance& inst);

/// Drops repeated points and interior vertices where the path goes straight on.
Tour simplify_tour(Tour raw);

}  // namespace minlink

#include "minlink/orientation.hpp"

#include <algorithm>
#include <sstream>

namespace minlink {

namespace {

// Clockwise quadrant index: 0 for the positive x-axis, then (x>0,y<0), ...
int cw_quadrant(const Direction& d) {
    const auto x = d.dx();
    const auto y = d.dy();
    if (y == 0 && x > 0) return 0;
    if (y < 0 && x > 0) return 1;
    if (x == 0 && y < 0) return 2;
    if (y < 0 && x < 0) return 3;
    if (y == 0 && x < 0) return 4;
    if (y > 0 && x < 0) return 5;
    if (x == 0 && y > 0) return 6;
    return 7;
}

}  // namespace

bool clockwise_before(const Direction& a, const Direction& b) {
    const int qa = cw_quadrant(a);
    const int qb = cw_quadrant(b);
    if (qa != qb) {
        return qa < qb;
    }
    // Same open quadrant: a comes first clockwise when b is to its right.
    return cross(a, b) < 0;
}

OrientationSet OrientationSet::build(std::span<const std::pair<std::int64_t, std::int64_t>> raw) {
    using Code = OrientationError::Code;
    if (raw.empty()) {
        throw OrientationError(Code::empty, "orientation set is empty");
    }
    OrientationSet set;
    for (const auto& [dx, dy] : raw) {
        if (dx == 0 && dy == 0) {
            throw OrientationError(Code::invalid_direction, "orientation (0,0) is not a direction");
        }
        const Direction d(dx, dy);
        if (std::find(set.dirs_.begin(), set.dirs_.end(), d) != set.dirs_.end()) {
            std::ostringstream os;
            os << "duplicate orientation " << d;
            throw OrientationError(Code::duplicate, os.str());
        }
        set.dirs_.push_back(d);
    }
    for (const Direction& d : set.dirs_) {
        if (std::find(set.dirs_.begin(), set.dirs_.end(), -d) == set.dirs_.end()) {
            std::ostringstream os;
            os << "orientation set is not closed under negation: missing " << -d;
            throw OrientationError(Code::not_closed_under_negation, os.str());
        }
    }
    const bool spans = std::any_of(set.dirs_.begin(), set.dirs_.end(),
                                   [&](const Direction& d) { return cross(d, set.dirs_.front()) != 0; });
    if (!spans) {
        throw OrientationError(Code::not_spanning, "orientation set does not span the plane");
    }
    std::sort(set.dirs_.begin(), set.dirs_.end(), clockwise_before);
    return set;
}

std::optional<std::size_t> OrientationSet::index_of(const Direction& d) const {
    const auto it = std::find(dirs_.begin(), dirs_.end(), d);
    if (it == dirs_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - dirs_.begin());
}

std::optional<std::size_t> OrientationSet::index_along(const Vector& v) const {
    for (std::size_t j = 0; j < dirs_.size(); ++j) {
        if (points_along(v, dirs_[j])) {
            return j;
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> OrientationSet::between(std::size_t j, std::size_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t x = succ(j); x != k; x = succ(x)) {
        if (x == j) {
            break;
        }
        out.push_back(x);
    }
    return out;
}

}  // namespace minlink

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "minlink/geometry.hpp"

namespace minlink {

class OrientationError : public std::invalid_argument {
public:
    enum class Code { empty, duplicate, not_closed_under_negation, not_spanning, invalid_direction };

    OrientationError(Code code, const std::string& what) : std::invalid_argument(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// A finite orientation set C: directions sorted clockwise starting from the
/// positive x-axis, closed under negation and spanning the plane.
class OrientationSet {
public:
    /// Throws OrientationError.
    static OrientationSet build(std::span<const std::pair<std::int64_t, std::int64_t>> raw);
    static OrientationSet build(std::initializer_list<std::pair<std::int64_t, std::int64_t>> raw) {
        return build(std::span<const std::pair<std::int64_t, std::int64_t>>(raw.begin(), raw.size()));
    }

    std::size_t size() const { return dirs_.size(); }
    const Direction& dir(std::size_t j) const { return dirs_[j]; }
    const std::vector<Direction>& dirs() const { return dirs_; }

    std::size_t opposite(std::size_t j) const { return (j + size() / 2) % size(); }
    std::size_t succ(std::size_t j) const { return (j + 1) % size(); }
    std::size_t pred(std::size_t j) const { return (j + size() - 1) % size(); }

    std::optional<std::size_t> index_of(const Direction& d) const;
    /// Index of the orientation along which `v` points, if any.
    std::optional<std::size_t> index_along(const Vector& v) const;

    /// Orientations strictly between j and k in clockwise order from j
    /// (every other orientation when j == k).
    std::vector<std::size_t> between(std::size_t j, std::size_t k) const;

    friend bool operator==(const OrientationSet&, const OrientationSet&) = default;

private:
    std::vector<Direction> dirs_;
};

/// Clockwise "less" starting from the positive x-axis; exact.
bool clockwise_before(const Direction& a, const Direction& b);

}  // namespace minlink

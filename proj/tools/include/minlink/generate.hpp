#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "minlink/instance.hpp"

namespace minlink {

struct GenParams {
    std::size_t n = 5;
    std::size_t c_size = 4;
    std::int64_t bound = 50;  ///< coordinates lie in [-bound, bound]
    std::uint64_t seed = 1;
};

/// The fixed orientation set of the given even size: the axes, then the
/// diagonals, then steeper primitive vectors, each with its negation.
/// Throws std::invalid_argument for odd sizes, sizes below 4 or above 16.
OrientationSet canonical_orientations(std::size_t c_size);

/// Deterministic random valid instance. Throws std::invalid_argument for
/// impossible parameters.
Instance generate_instance(const GenParams& params);

/// Instance document text for `generate_instance(params)`.
std::string generate_command(const GenParams& params);

}  // namespace minlink

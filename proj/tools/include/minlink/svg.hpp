#pragma once

#include <string>

#include "minlink/instance.hpp"
#include "minlink/interval.hpp"
#include "minlink/recovery.hpp"

namespace minlink {

/// SVG 1.1 drawing of the instance and tour. With a ledger, adds one group per
/// (layer, orientation) holding that layer's I and I+ intervals.
std::string emit_svg(const Instance& inst, const Tour& tour, const Ledger* ledger = nullptr);

}  // namespace minlink

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "minlink/instance.hpp"
#include "minlink/interval.hpp"
#include "minlink/region.hpp"

namespace minlink {

/// Points reachable by extending the last link of a path ending in `a`.
/// An interval with zero links has no last link, so its region is the point itself.
ConvexRegion pt_region(const Interval& a, const Instance& inst);

/// PT(a) swept by orientation j: one further turn into c_j.
ConvexRegion psi_region(const Interval& a, std::size_t j, const Instance& inst);

/// Continue straight from every interval of `fam` onto layer `next`.
std::vector<Interval> plus_zero(std::span<const Interval> fam, std::size_t next, const Instance& inst);

/// Turn once into orientation j from every source onto layer `next`.
std::vector<Interval> plus_one(std::span<const Interval> sources, std::size_t j, std::size_t next,
                               const Instance& inst);

/// Two turns, the second into c_j, from the intervals of I(e_i). Sources with
/// zero links are skipped: their two-turn reach equals one turn from I+(e_0).
std::vector<Interval> plus_two(std::span<const Interval> base, std::size_t j, std::size_t next,
                               const Instance& inst);

/// Sorts and unions overlapping or touching intervals. All inputs must share
/// layer, link count and orientation; throws ContractViolation otherwise.
std::vector<Interval> merge_intervals(std::vector<Interval> list);

/// Stage I. Throws InternalConsistencyError if some layer cannot be reached.
Ledger run_stage_one(const Instance& inst);

}  // namespace minlink

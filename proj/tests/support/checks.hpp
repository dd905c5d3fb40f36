#pragma once

#include <string>
#include <vector>

#include "minlink/generate.hpp"
#include "minlink/instance.hpp"
#include "minlink/interval.hpp"
#include "minlink/recovery.hpp"

namespace minlink::testing {

using Findings = std::vector<std::string>;

/// l(e_{i-1}) <= l(e_i) <= l(e_{i-1}) + 2.
Findings check_link_growth(const Ledger& ledger);
/// |I(e_i, c_j)| <= 2i + 1 and |I+(e_i, c_j)| <= 2i + 1.
Findings check_family_sizes(const Ledger& ledger);
/// Every a in I(e_i) lies inside some b in I+(e_i, c_j) for each j != c_a.
Findings check_containment(const Ledger& ledger, const Instance& inst);
/// If PT of some interval with orientation opposite to c_j meets e_{i+1},
/// no interval with orientation c_j has PT meeting e_{i+1}.
Findings check_exclusivity(const Ledger& ledger, const Instance& inst);
/// When l jumps by two, every I+ family is the whole segment.
Findings check_full_plus_after_jump(const Ledger& ledger, const Instance& inst);
/// Merged family sizes against the turn-count bounds.
Findings check_turn_bounds(const Ledger& ledger);
/// Walks back from sample points of every interval and checks each subpath.
Findings check_subpaths(const Ledger& ledger, const Instance& inst);

/// Fixed generated corpus: 510 instances, n <= 12, |C| in {4, 6, 8}, bound 50.
std::vector<GenParams> corpus();

/// Instance W: C4, s=(0,0), t=(4,0), e_1=(2,1)-(2,3).
Instance instance_w();
Instance instance_empty(Point t = {4, 0});
OrientationSet c4();

}  // namespace minlink::testing

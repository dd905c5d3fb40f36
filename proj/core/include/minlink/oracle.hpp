#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "minlink/instance.hpp"
#include "minlink/interval.hpp"
#include "minlink/recovery.hpp"
#include "minlink/report.hpp"

namespace minlink {

class OracleTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct OracleLimits {
    std::size_t max_segments = 32;
    std::size_t max_orientations = 12;
    int max_turns = 4;
};

/// Brute-force reachable sets. From every interval of layer i, every sequence
/// of up to `max_turns_per_hop` turns is tried, swept exactly and clipped
/// against layer i+1, with no pruning. Ledger-shaped output: per layer the
/// minimal link count and the sets at that count and one more.
Ledger oracle_reachable_sets(const Instance& inst, int max_turns_per_hop = 3, const OracleLimits& limits = {});

int oracle_min_links(const Instance& inst);

/// Codes: empty-tour, wrong-start, wrong-end, zero-length-link, non-c-oriented-link,
/// redundant-vertex, link-count-mismatch, visit-count-mismatch, visit-index-mismatch,
/// visit-point-off-segment, visit-points-out-of-order.
ValidationReport validate_tour(const Instance& inst, const Tour& tour);

struct LedgerDivergence {
    std::size_t layer = 0;
    std::string family;                 ///< "links", "base" or "plus"
    std::optional<std::size_t> orient;
    std::string detail;
};

struct LedgerDiff {
    std::vector<LedgerDivergence> items;  ///< in layer order; items.front() is the first divergence

    bool empty() const { return items.empty(); }
    std::string describe() const;
};

/// Exact comparison after canonical sorting and union of each family.
LedgerDiff compare_ledgers(const Ledger& a, const Ledger& b);

}  // namespace minlink

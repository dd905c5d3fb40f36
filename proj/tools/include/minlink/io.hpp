#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minlink/instance.hpp"
#include "minlink/interval.hpp"
#include "minlink/recovery.hpp"

namespace minlink {

/// Malformed instance or result text. `where` is a field path ("segments[1][0]")
/// or a position ("line 3, column 7").
class ParseError : public std::invalid_argument {
public:
    ParseError(std::string where, const std::string& msg)
        : std::invalid_argument(where.empty() ? msg : where + ": " + msg), where_(std::move(where)) {}
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

/// Parses and validates an instance document. Throws ParseError or InvalidInstance.
Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst);

struct Timing {
    double stage_one_ms = 0;
    double stage_two_ms = 0;

    friend bool operator==(const Timing&, const Timing&) = default;
};

struct ResultDocument {
    int link_count = 0;
    std::vector<int> layer_links;
    Tour tour;
    std::optional<Ledger> families;
    Timing timing;

    friend bool operator==(const ResultDocument& a, const ResultDocument& b) {
        return a.link_count == b.link_count && a.layer_links == b.layer_links && a.tour == b.tour &&
               a.families.has_value() == b.families.has_value() &&
               (!a.families || a.families->layers == b.families->layers) && a.timing == b.timing;
    }
};

ResultDocument make_result(const Ledger& ledger, const Tour& tour, bool with_families, Timing timing = {});
std::string emit_result(const ResultDocument& doc);
ResultDocument parse_result(std::string_view text);

}  // namespace minlink

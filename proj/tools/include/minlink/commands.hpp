#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "minlink/bench.hpp"
#include "minlink/generate.hpp"

namespace minlink {

enum ExitCode : int { exit_ok = 0, exit_invalid = 1, exit_internal = 2, exit_oracle_mismatch = 3 };

struct SolveOptions {
    std::string input;
    std::optional<std::string> emit_json;
    std::optional<std::string> emit_svg;
    bool families = false;      ///< include interval families in the JSON result
    bool overlay = false;       ///< draw interval families in the SVG
    bool check_oracle = false;
};

int solve_command(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int validate_command(const std::string& input, std::ostream& out, std::ostream& err);
int gen_command(const GenParams& params, const std::optional<std::string>& output, std::ostream& out,
                std::ostream& err);
int bench_command(const BenchSweep& sweep, const std::optional<std::string>& output, std::ostream& out,
                  std::ostream& err);

}  // namespace minlink

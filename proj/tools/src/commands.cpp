#include "minlink/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "minlink/io.hpp"
#include "minlink/oracle.hpp"
#include "minlink/recovery.hpp"
#include "minlink/stage_one.hpp"
#include "minlink/svg.hpp"

namespace minlink {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(path, "cannot open file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw std::runtime_error("cannot write " + path);
    }
}

void print_report(std::ostream& os, const ValidationReport& report) {
    for (const Violation& v : report.violations) {
        os << "violation " << v.code;
        if (!v.location.empty()) {
            os << " at " << v.location;
        }
        os << ": " << v.message << '\n';
    }
    for (const Violation& v : report.notes) {
        os << "note " << v.code << " at " << v.location << '\n';
    }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int solve_command(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
    std::optional<Instance> inst;
    try {
        inst = parse_instance(read_file(opt.input));
    } catch (const InvalidInstance& e) {
        err << "invalid instance\n";
        print_report(err, e.report());
        return exit_invalid;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_invalid;
    }

    try {
        auto t0 = std::chrono::steady_clock::now();
        const Ledger ledger = run_stage_one(*inst);
        const double ms1 = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        const Tour tour = run_stage_two(ledger, *inst);
        const double ms2 = ms_since(t0);

        const ValidationReport tour_report = validate_tour(*inst, tour);
        if (!tour_report.ok() || tour.link_count != ledger.final_links()) {
            err << "internal error: produced tour fails validation\n";
            print_report(err, tour_report);
            return exit_internal;
        }
        out << "links: " << tour.link_count << '\n';

        if (opt.emit_json) {
            write_file(*opt.emit_json, emit_result(make_result(ledger, tour, opt.families, {ms1, ms2})));
        }
        if (opt.emit_svg) {
            write_file(*opt.emit_svg, emit_svg(*inst, tour, opt.overlay ? &ledger : nullptr));
        }
        if (opt.check_oracle) {
            const Ledger reference = oracle_reachable_sets(*inst);
            const LedgerDiff diff = compare_ledgers(ledger, reference);
            if (!diff.empty() || reference.final_links() != tour.link_count) {
                err << "oracle mismatch\n" << diff.describe();
                return exit_oracle_mismatch;
            }
            out << "oracle: ok\n";
        }
    } catch (const InternalConsistencyError& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const OracleTooLarge& e) {
        err << e.what() << '\n';
        return exit_invalid;
    }
    return exit_ok;
}

int validate_command(const std::string& input, std::ostream& out, std::ostream& err) {
    try {
        const Instance inst = parse_instance(read_file(input));
        const ValidationReport report = validate_instance(inst);
        print_report(out, report);
        out << "valid\n";
        return exit_ok;
    } catch (const InvalidInstance& e) {
        print_report(out, e.report());
        out << "invalid\n";
        return exit_invalid;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_invalid;
    }
}

int gen_command(const GenParams& params, const std::optional<std::string>& output, std::ostream& out,
                std::ostream& err) {
    try {
        const std::string text = generate_command(params);
        if (output) {
            write_file(*output, text);
        } else {
            out << text;
        }
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return exit_invalid;
    }
}

int bench_command(const BenchSweep& sweep, const std::optional<std::string>& output, std::ostream& out,
                  std::ostream& err) {
    try {
        const std::string csv = bench_csv(run_bench(sweep));
        if (output) {
            write_file(*output, csv);
        } else {
            out << csv;
        }
        return exit_ok;
    } catch (const InternalConsistencyError& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return exit_invalid;
    }
}

}  // namespace minlink

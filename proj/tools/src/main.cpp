#include <iostream>

#include <CLI11.hpp>

#include "minlink/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Minimum-link C-oriented tours through ordered segments"};
    app.require_subcommand(1);

    minlink::SolveOptions solve;
    std::string json_out;
    std::string svg_out;
    auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
    solve_cmd->add_option("input", solve.input, "Instance file")->required();
    solve_cmd->add_option("--emit-json", json_out, "Write the result document here");
    solve_cmd->add_option("--emit-svg", svg_out, "Write an SVG drawing here");
    solve_cmd->add_flag("--families", solve.families, "Include interval families in the JSON result");
    solve_cmd->add_flag("--overlay", solve.overlay, "Draw interval families in the SVG");
    solve_cmd->add_flag("--check-oracle", solve.check_oracle, "Cross-check against the brute-force oracle");

    std::string validate_in;
    auto* validate_cmd = app.add_subcommand("validate", "Validate an instance file");
    validate_cmd->add_option("input", validate_in, "Instance file")->required();

    minlink::GenParams gen;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--n", gen.n, "Number of segments");
    gen_cmd->add_option("--c", gen.c_size, "Orientation set size (even, 4..16)");
    gen_cmd->add_option("--bound", gen.bound, "Coordinate bound");
    gen_cmd->add_option("--seed", gen.seed, "Random seed");
    gen_cmd->add_option("--out", gen_out, "Output file (default stdout)");

    minlink::BenchSweep sweep;
    std::string bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "Time a sweep of generated instances, CSV output");
    bench_cmd->add_option("--n", sweep.ns, "Segment counts")->delimiter(',');
    bench_cmd->add_option("--c", sweep.c_sizes, "Orientation set sizes")->delimiter(',');
    bench_cmd->add_option("--seeds", sweep.seeds, "Seeds")->delimiter(',');
    bench_cmd->add_option("--bound", sweep.bound, "Coordinate bound");
    bench_cmd->add_option("--out", bench_out, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    auto opt = [](const std::string& s) { return s.empty() ? std::nullopt : std::optional<std::string>(s); };
    if (*solve_cmd) {
        solve.emit_json = opt(json_out);
        solve.emit_svg = opt(svg_out);
        return minlink::solve_command(solve, std::cout, std::cerr);
    }
    if (*validate_cmd) {
        return minlink::validate_command(validate_in, std::cout, std::cerr);
    }
    if (*gen_cmd) {
        return minlink::gen_command(gen, opt(gen_out), std::cout, std::cerr);
    }
    return minlink::bench_command(sweep, opt(bench_out), std::cout, std::cerr);
}

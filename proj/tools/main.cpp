#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spectrum/fuzz.hpp"
#include "spectrum/scenario.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_run_failed = 1;
constexpr int exit_parse_error = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

struct output_paths {
    std::string events_out;
    std::string state_out;
};

int run_scenario_text(const std::string& text, const std::string& label,
                      const spectrum::run_options& options, const output_paths& outputs) {
    spectrum::scenario scn;
    try {
        scn = spectrum::parse_scenario(text);
    } catch (const spectrum::parse_failure& e) {
        std::cerr << label << ": parse error at " << e.what() << "\n";
        return exit_parse_error;
    }

    const spectrum::run_report report = spectrum::execute(scn, options);

    if (!outputs.events_out.empty()) {
        write_file(outputs.events_out, spectrum::render_events(report.events));
    }
    if (!outputs.state_out.empty()) {
        write_file(outputs.state_out, report.final_snapshot.dump(2) + "\n");
    }

    std::uint64_t passed = 0;
    for (const auto& assertion : report.assertions) passed += assertion.passed ? 1 : 0;
    std::cout << label << ": " << report.commands_executed << " command(s), " << passed << "/"
              << report.assertions.size() << " assertion(s) passed, " << report.events.size()
              << " event(s)\n";

    for (const auto& assertion : report.assertions) {
        if (!assertion.passed) {
            std::cout << "FAIL line " << assertion.line_no << ": " << assertion.check
                      << " (expected " << assertion.expected << ", actual " << assertion.actual
                      << ")\n";
        }
    }
    if (report.failure) {
        std::cout << "ERROR line " << report.failure->line_no << ": " << report.failure->error
                  << " (" << report.failure->message << ")\n";
    }
    if (!report.ok()) {
        std::cout << "first failing line: " << *report.first_failing_line() << "\n";
        return exit_run_failed;
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic spectrum-token ledger: scenario runner and fuzzer"};
    app.require_subcommand(1);

    // run
    std::string scenario_path;
    output_paths run_outputs;
    bool check_invariants = false;
    std::uint64_t run_seed = 0;
    CLI::App* run = app.add_subcommand("run", "Execute a scenario file");
    run->add_option("scenario", scenario_path, "Scenario file")->required();
    run->add_option("--events-out", run_outputs.events_out, "Write the event log (one JSON record per line)");
    run->add_option("--state-out", run_outputs.state_out, "Write the final state document");
    run->add_flag("--check-invariants", check_invariants, "Audit all invariants after every command");
    run->add_option("--seed", run_seed, "Accepted for interface symmetry; only the fuzz generator uses a seed");

    // fuzz
    std::uint64_t fuzz_steps = 1000;
    std::uint64_t fuzz_accounts = 8;
    std::uint64_t fuzz_seed = 1;
    std::string fuzz_out;
    output_paths fuzz_outputs;
    CLI::App* fuzz = app.add_subcommand("fuzz", "Generate and execute a randomized scenario with invariant checking");
    fuzz->add_option("--steps", fuzz_steps, "Randomized command count")->required();
    fuzz->add_option("--accounts", fuzz_accounts, "Account count (owner + SUs)")->required()
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{64}));
    fuzz->add_option("--seed", fuzz_seed, "Generator seed");
    fuzz->add_option("--out", fuzz_out, "Write the generated scenario text");
    fuzz->add_option("--events-out", fuzz_outputs.events_out, "Write the event log");
    fuzz->add_option("--state-out", fuzz_outputs.state_out, "Write the final state document");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return run_scenario_text(read_file(scenario_path), scenario_path,
                                     spectrum::run_options{check_invariants}, run_outputs);
        }
        const std::string text =
            spectrum::generate_scenario(fuzz_seed, fuzz_steps, fuzz_accounts);
        if (!fuzz_out.empty()) write_file(fuzz_out, text);
        const std::string label =
            "fuzz(seed=" + std::to_string(fuzz_seed) + ", steps=" + std::to_string(fuzz_steps) +
            ", accounts=" + std::to_string(fuzz_accounts) + ")";
        return run_scenario_text(text, label, spectrum::run_options{true}, fuzz_outputs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_run_failed;
    }
}

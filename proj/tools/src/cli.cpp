#include "typrank_app/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "typrank/error.hpp"
#include "typrank/monte_carlo.hpp"
#include "typrank_app/commands.hpp"
#include "typrank_app/render.hpp"

namespace typrank::app {

namespace {

struct OutputFlags {
    bool json = false;
    bool csv = false;
    std::string output_path;
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
    auto* json = cmd->add_flag("--json", flags.json, "Print the run record as JSON");
    cmd->add_flag("--csv", flags.csv, "Print comma-separated values")->excludes(json);
    cmd->add_option("--output,-o", flags.output_path, "Also write the JSON run record to this file");
}

void add_monte_carlo_flags(CLI::App* cmd, MonteCarloOptions& o) {
    cmd->add_option("--trials", o.trials, "Number of independent trials")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Master seed");
    cmd->add_option("--workers", o.workers, "Worker threads (never changes results)")
        ->check(CLI::PositiveNumber)
        ->envname("TYPRANK_WORKERS");
    cmd->add_option("--tau-res", o.tolerances.residual, "Residual threshold")->check(CLI::PositiveNumber);
    cmd->add_option("--tau-real", o.tolerances.real, "Realness threshold")->check(CLI::PositiveNumber);
    cmd->add_option("--max-attempts", o.tolerances.max_attempts, "Solver randomizations per trial")
        ->check(CLI::PositiveNumber);
}

// Writes through a sibling temporary so a failed run never leaves a file.
void write_atomically(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open " + tmp.string() + " for writing");
        f << content << '\n';
        if (!f.flush()) throw Error(ErrorKind::InvalidArgument, "failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Typical tensor ranks, Segre intersections and real lines on cubic surfaces", "typrank"};
    app.require_subcommand(1);
    app.set_version_flag("--version", library_version());

    OutputFlags flags;
    MonteCarloOptions mc;
    mc.workers = default_worker_count();
    std::function<RunRecord()> action;

    std::string format;
    auto* estimate = app.add_subcommand("estimate", "Monte Carlo rank probabilities for a tensor format");
    estimate->add_option("--format", format, "Format MxNxL with M <= N <= L")->required();
    add_monte_carlo_flags(estimate, mc);
    add_output_flags(estimate, flags);
    estimate->callback([&] { action = [&] { return cmd_estimate(format, mc); }; });

    int m = 0, n = 0;
    bool asymptotic = false;
    std::vector<int> range_values;
    auto* expectation = app.add_subcommand("expectation", "Expected real intersection count with the Segre variety");
    expectation->add_option("--m", m, "Rows")->required();
    expectation->add_option("--n", n, "Columns")->required();
    expectation->add_flag("--asymptotic", asymptotic, "Report the leading asymptotic coefficient and ratio");
    expectation->add_option("--range", range_values, "Ratio table over N_MIN N_MAX [STEP]")->expected(2, 3);
    add_output_flags(expectation, flags);
    expectation->callback([&] {
        action = [&] {
            std::optional<ExpectationRange> range;
            if (!range_values.empty())
                range = ExpectationRange{range_values[0], range_values[1], range_values.size() > 2 ? range_values[2] : 1};
            return cmd_expectation(m, n, asymptotic, range);
        };
    });

    auto* lines = app.add_subcommand("lines", "Real lines on random determinantal cubic surfaces");
    add_monte_carlo_flags(lines, mc);
    add_output_flags(lines, flags);
    lines->callback([&] { action = [&] { return cmd_lines(mc); }; });

    auto* polytope = app.add_subcommand("polytope", "Exact vertices of the (E, p6) polygon");
    add_output_flags(polytope, flags);
    polytope->callback([&] { action = [] { return cmd_polytope(); }; });

    auto* invariants = app.add_subcommand("invariants", "Degree, parity, alpha and codimension of the Segre variety");
    invariants->add_option("--m", m, "Rows")->required();
    invariants->add_option("--n", n, "Columns")->required();
    add_output_flags(invariants, flags);
    invariants->callback([&] { action = [&] { return cmd_invariants(m, n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    RunRecord record;
    try {
        record = action();
    } catch (const Error& e) {
        err << "typrank: " << e.what() << '\n';
        return is_trial_rejection(e.kind()) ? kExitNumerical : kExitUsage;
    }

    if (record.parameters.contains("trials") && rejection_rate(record) > kMaxRejectionRate) {
        err << "typrank: rejected " << record.rejected << " of " << record.parameters["trials"].get<long>()
            << " trials, above the " << kMaxRejectionRate * 100 << "% limit; no results written\n";
        return kExitNumerical;
    }

    try {
        if (!flags.output_path.empty()) write_atomically(flags.output_path, to_json_string(record));
    } catch (const std::exception& e) {
        err << "typrank: " << e.what() << '\n';
        return kExitUsage;
    }
    const OutputFormat fmt = flags.json ? OutputFormat::Json : flags.csv ? OutputFormat::Csv : OutputFormat::Table;
    render(record, fmt, out);
    return kExitSuccess;
}

} // namespace typrank::app

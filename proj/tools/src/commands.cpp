#include "typrank_app/commands.hpp"

#include <chrono>
#include <cmath>

#include "typrank/classifier.hpp"
#include "typrank/cubic.hpp"
#include "typrank/error.hpp"
#include "typrank/format.hpp"
#include "typrank/monte_carlo.hpp"
#include "typrank/polytope.hpp"
#include "typrank/segre.hpp"

namespace typrank::app {

using nlohmann::json;

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

RunRecord make_record(std::string command, json parameters) {
    RunRecord r;
    r.command = std::move(command);
    r.parameters = std::move(parameters);
    r.version = library_version();
    return r;
}

json tolerance_json(const SolverTolerances& tol) {
    return json{{"tau_res", tol.residual}, {"tau_real", tol.real}, {"max_attempts", tol.max_attempts}};
}

json monte_carlo_parameters(const MonteCarloOptions& o) {
    if (o.trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be positive");
    return json{{"trials", o.trials}, {"seed", o.seed}, {"tolerances", tolerance_json(o.tolerances)}};
}

json estimate_json(const ProbEstimate& e) {
    return json{{"successes", e.successes},
                {"accepted", e.accepted()},
                {"p_hat", e.p_hat},
                {"stderr", e.stderr_()},
                {"ci95", {e.ci95.lo, e.ci95.hi}}};
}

json distribution_json(const CountDistribution& d) {
    json tallies = json::array();
    for (int c : d.support) {
        const auto it = d.tallies.find(c);
        const long tally = it == d.tallies.end() ? 0 : it->second;
        tallies.push_back({{"count", c}, {"tally", tally}, {"p_hat", d.probability(c)}});
    }
    return json{{"support", d.support},
                {"tallies", tallies},
                {"accepted", d.accepted()},
                {"mean", d.mean()},
                {"mean_stderr", d.mean_stderr()}};
}

std::string rational_string(const Rational& q) {
    return q.denominator() == 1 ? std::to_string(q.numerator())
                                : std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

json expectation_row(int m, int n) {
    json row{{"n", n}, {"expected", expected_intersections(m, n)}};
    if (m >= 3) row["ratio"] = asymptotic_ratio(m, n);
    return row;
}

} // namespace

double rejection_rate(const RunRecord& record) {
    const long trials = record.parameters.value("trials", 0L);
    return trials == 0 ? 0.0 : static_cast<double>(record.rejected) / static_cast<double>(trials);
}

RunRecord cmd_estimate(const std::string& format_text, const MonteCarloOptions& options) {
    const Stopwatch clock;
    const Format format = Format::parse(format_text);
    require_supported(format);
    json parameters = monte_carlo_parameters(options);
    parameters["format"] = format.to_string();
    RunRecord record = make_record("estimate", std::move(parameters));

    const RankEstimate est =
        monte_carlo_rank(format, options.trials, options.seed, options.workers, options.tolerances);
    json ranks = json::array();
    for (const auto& [rank, e] : est.ranks) {
        json entry = estimate_json(e);
        entry["rank"] = rank;
        ranks.push_back(std::move(entry));
    }
    record.results = json{{"regime", std::string(to_string(format.regime()))},
                          {"ranks", ranks},
                          {"rejection_rate", est.rejection_rate()}};
    if (est.counts) {
        json counts = distribution_json(*est.counts);
        counts["expected_mean"] = expected_intersections(format.m(), format.n());
        record.results["counts"] = std::move(counts);
    }
    record.rejected = est.rejected;
    record.elapsed_seconds = clock.seconds();
    return record;
}

RunRecord cmd_expectation(int m, int n, bool asymptotic, const std::optional<ExpectationRange>& range) {
    const Stopwatch clock;
    if (m < 2 || n < m) throw Error(ErrorKind::InvalidArgument, "expectation requires 2 <= m <= n");
    json parameters{{"m", m}, {"n", n}, {"asymptotic", asymptotic}};
    if (range) {
        if (range->n_min < m || range->n_max < range->n_min || range->step < 1)
            throw Error(ErrorKind::InvalidArgument, "range requires m <= n_min <= n_max and step >= 1");
        parameters["range"] = {{"n_min", range->n_min}, {"n_max", range->n_max}, {"step", range->step}};
    }
    RunRecord record = make_record("expectation", std::move(parameters));
    json& res = record.results;
    res["expected"] = expected_intersections(m, n);
    if (m % 2 == 1) res["odd_product"] = expected_intersections_odd_product((m - 1) / 2, n);
    if (asymptotic) {
        const double c = asymptotic_coefficient(m);
        const double exponent = (m - 1) / 2.0;
        res["asymptotic"] = {{"coefficient", c},
                             {"exponent", exponent},
                             {"leading_term", c * std::pow(n, exponent)},
                             {"ratio", asymptotic_ratio(m, n)}};
    }
    if (range) {
        json table = json::array();
        for (int k = range->n_min; k <= range->n_max; k += range->step) table.push_back(expectation_row(m, k));
        res["table"] = std::move(table);
    }
    record.elapsed_seconds = clock.seconds();
    return record;
}

RunRecord cmd_lines(const MonteCarloOptions& options) {
    const Stopwatch clock;
    RunRecord record = make_record("lines", monte_carlo_parameters(options));
    const LineStatistics s =
        estimate_line_statistics(options.trials, options.seed, options.workers, options.tolerances);
    const PolygonVertices polygon = polytope_vertices();

    json classes = json::array();
    for (const auto& [lines, tally] : s.line_tallies)
        classes.push_back({{"lines", lines}, {"tally", tally}, {"q_hat", s.q_hat(lines)}});
    const double lo = boost::rational_cast<double>(polygon.min_expected_lines());
    const double hi = boost::rational_cast<double>(polygon.max_expected_lines());
    const bool in_bounds = s.expected_lines >= lo - s.expected_lines_ci && s.expected_lines <= hi + s.expected_lines_ci;
    record.results = json{
        {"classes", classes},
        {"points", distribution_json(s.points)},
        {"expected_lines", s.expected_lines},
        {"expected_lines_stderr", s.expected_lines_stderr},
        {"expected_lines_ci95", {s.expected_lines - s.expected_lines_ci, s.expected_lines + s.expected_lines_ci}},
        {"bounds", {lo, hi}},
        {"within_bounds", in_bounds},
        {"p6", s.p6},
        {"p6_stderr", s.p6_stderr},
        {"inside_polygon", polygon.contains(s.expected_lines, s.p6, s.expected_lines_ci, 1.96 * s.p6_stderr)},
        {"rejection_rate", s.trials == 0 ? 0.0 : static_cast<double>(s.rejected) / static_cast<double>(s.trials)}};
    record.rejected = s.rejected;
    record.elapsed_seconds = clock.seconds();
    return record;
}

RunRecord cmd_polytope() {
    const Stopwatch clock;
    RunRecord record = make_record("polytope", json::object());
    const PolygonVertices polygon = polytope_vertices();
    json vertices = json::array();
    for (const auto& v : polygon.vertices) {
        vertices.push_back({{"expected_lines", rational_string(v.expected_lines)},
                            {"p6", rational_string(v.p6)},
                            {"expected_lines_value", boost::rational_cast<double>(v.expected_lines)},
                            {"p6_value", boost::rational_cast<double>(v.p6)}});
    }
    json discarded = json::array();
    for (const auto& b : basic_solutions()) {
        if (b.feasible) continue;
        json p = json::array();
        for (const auto& q : b.p) p.push_back(rational_string(q));
        discarded.push_back({{"zeroed", b.zeroed}, {"p", p}});
    }
    record.results = json{{"vertices", vertices},
                          {"expected_lines_range",
                           {rational_string(polygon.min_expected_lines()), rational_string(polygon.max_expected_lines())}},
                          {"infeasible_bases", discarded}};
    record.elapsed_seconds = clock.seconds();
    return record;
}

RunRecord cmd_invariants(int m, int n) {
    const Stopwatch clock;
    RunRecord record = make_record("invariants", json{{"m", m}, {"n", n}});
    const SegreInfo s = segre_info(m, n);
    record.results = json{{"dim", s.dim},
                          {"codim", s.codim},
                          {"degree", s.degree},
                          {"parity", s.degree_odd ? "odd" : "even"},
                          {"alpha", s.alpha},
                          {"boundary_length", s.codim + 1},
                          {"expected_intersections", expected_intersections(m, n)}};
    record.elapsed_seconds = clock.seconds();
    return record;
}

} // namespace typrank::app

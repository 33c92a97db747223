#include "typrank_app/render.hpp"

#include <iomanip>
#include <sstream>

#include "typrank/error.hpp"

namespace typrank::app {

using nlohmann::json;

namespace {

std::string num(const json& v) {
    if (v.is_number_float()) {
        std::ostringstream s;
        s << std::setprecision(10) << v.get<double>();
        return s.str();
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
    out << "  " << std::left << std::setw(26) << key << value << '\n';
}

std::string interval(const json& pair) { return "[" + num(pair[0]) + ", " + num(pair[1]) + "]"; }

void table_estimate(const RunRecord& r, std::ostream& out) {
    const json& res = r.results;
    out << "rank probabilities  (" << r.parameters["format"].get<std::string>() << ", "
        << res["regime"].get<std::string>() << ")\n";
    out << "  " << std::left << std::setw(8) << "rank" << std::setw(16) << "p_hat" << std::setw(16)
        << "stderr" << "ci95\n";
    for (const auto& e : res["ranks"])
        out << "  " << std::setw(8) << num(e["rank"]) << std::setw(16) << num(e["p_hat"]) << std::setw(16)
            << num(e["stderr"]) << interval(e["ci95"]) << '\n';
    if (res.contains("counts")) {
        const json& c = res["counts"];
        out << "real intersection counts\n";
        for (const auto& t : c["tallies"])
            row(out, "count " + num(t["count"]), num(t["tally"]) + "  (p_hat " + num(t["p_hat"]) + ")");
        row(out, "mean", num(c["mean"]) + " +- " + num(c["mean_stderr"]));
        row(out, "expected mean", num(c["expected_mean"]));
    }
}

void table_expectation(const RunRecord& r, std::ostream& out) {
    const json& res = r.results;
    row(out, "expected intersections", num(res["expected"]));
    if (res.contains("odd_product")) row(out, "odd product", num(res["odd_product"]));
    if (res.contains("asymptotic")) {
        const json& a = res["asymptotic"];
        row(out, "coefficient c", num(a["coefficient"]));
        row(out, "exponent", num(a["exponent"]));
        row(out, "c n^exponent", num(a["leading_term"]));
        row(out, "ratio", num(a["ratio"]));
    }
    if (res.contains("table")) {
        out << "  " << std::left << std::setw(10) << "n" << std::setw(22) << "expected" << "ratio\n";
        for (const auto& t : res["table"])
            out << "  " << std::setw(10) << num(t["n"]) << std::setw(22) << num(t["expected"])
                << (t.contains("ratio") ? num(t["ratio"]) : "-") << '\n';
    }
}

void table_lines(const RunRecord& r, std::ostream& out) {
    const json& res = r.results;
    out << "real lines on random cubic surfaces\n";
    for (const auto& c : res["classes"])
        row(out, num(c["lines"]) + " lines", num(c["tally"]) + "  (q_hat " + num(c["q_hat"]) + ")");
    row(out, "expected lines", num(res["expected_lines"]) + "  ci95 " + interval(res["expected_lines_ci95"]));
    row(out, "bounds", interval(res["bounds"]) + (res["within_bounds"].get<bool>() ? "  ok" : "  VIOLATED"));
    row(out, "p6", num(res["p6"]) + " +- " + num(res["p6_stderr"]));
    row(out, "mean intersection count", num(res["points"]["mean"]) + " +- " + num(res["points"]["mean_stderr"]));
    row(out, "inside polygon", res["inside_polygon"].get<bool>() ? "yes" : "no");
}

void table_polytope(const RunRecord& r, std::ostream& out) {
    out << "vertices of the (E, p6) polygon, counterclockwise\n";
    for (const auto& v : r.results["vertices"])
        out << "  (" << num(v["expected_lines"]) << ", " << num(v["p6"]) << ")\n";
    row(out, "E range", interval(r.results["expected_lines_range"]));
}

void table_invariants(const RunRecord& r, std::ostream& out) {
    const json& res = r.results;
    out << "Segre variety of " << num(r.parameters["m"]) << "x" << num(r.parameters["n"]) << " rank-one matrices\n";
    for (const char* key : {"dim", "codim", "degree", "parity", "alpha", "boundary_length", "expected_intersections"})
        row(out, key, num(res[key]));
}

void csv_line(std::ostream& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out << ',';
        out << c;
        first = false;
    }
    out << '\n';
}

std::string cell(const json& v) {
    if (v.is_number_float()) {
        std::ostringstream s;
        s << std::setprecision(17) << v.get<double>();
        return s.str();
    }
    return num(v);
}

} // namespace

const char* csv_header(const std::string& command) {
    if (command == "estimate") return "kind,value,tally,accepted,p_hat,ci_lo,ci_hi";
    if (command == "expectation") return "m,n,expected,ratio";
    if (command == "lines") return "metric,value,stderr";
    if (command == "polytope") return "expected_lines,p6,expected_lines_value,p6_value";
    if (command == "invariants") return "m,n,dim,codim,degree,parity,alpha";
    throw Error(ErrorKind::InvalidArgument, "no CSV layout for command " + command);
}

void render_csv(const RunRecord& r, std::ostream& out) {
    out << csv_header(r.command) << '\n';
    const json& res = r.results;
    if (r.command == "estimate") {
        for (const auto& e : res["ranks"])
            csv_line(out, {"rank", cell(e["rank"]), cell(e["successes"]), cell(e["accepted"]), cell(e["p_hat"]),
                           cell(e["ci95"][0]), cell(e["ci95"][1])});
        if (res.contains("counts")) {
            const json& c = res["counts"];
            for (const auto& t : c["tallies"])
                csv_line(out, {"count", cell(t["count"]), cell(t["tally"]), cell(c["accepted"]), cell(t["p_hat"]), "",
                               ""});
        }
    } else if (r.command == "expectation") {
        const std::string m = cell(r.parameters["m"]);
        const json ratio = res.contains("asymptotic") ? res["asymptotic"]["ratio"] : json("");
        csv_line(out, {m, cell(r.parameters["n"]), cell(res["expected"]), cell(ratio)});
        if (res.contains("table"))
            for (const auto& t : res["table"])
                csv_line(out, {m, cell(t["n"]), cell(t["expected"]), t.contains("ratio") ? cell(t["ratio"]) : ""});
    } else if (r.command == "lines") {
        for (const auto& c : res["classes"]) csv_line(out, {"q_" + cell(c["lines"]), cell(c["q_hat"]), ""});
        csv_line(out, {"expected_lines", cell(res["expected_lines"]), cell(res["expected_lines_stderr"])});
        csv_line(out, {"p6", cell(res["p6"]), cell(res["p6_stderr"])});
        csv_line(out, {"mean_points", cell(res["points"]["mean"]), cell(res["points"]["mean_stderr"])});
    } else if (r.command == "polytope") {
        for (const auto& v : res["vertices"])
            csv_line(out, {cell(v["expected_lines"]), cell(v["p6"]), cell(v["expected_lines_value"]),
                           cell(v["p6_value"])});
    } else if (r.command == "invariants") {
        csv_line(out, {cell(r.parameters["m"]), cell(r.parameters["n"]), cell(res["dim"]), cell(res["codim"]),
                       cell(res["degree"]), cell(res["parity"]), cell(res["alpha"])});
    }
}

void render_table(const RunRecord& r, std::ostream& out) {
    if (r.command == "estimate") table_estimate(r, out);
    else if (r.command == "expectation") table_expectation(r, out);
    else if (r.command == "lines") table_lines(r, out);
    else if (r.command == "polytope") table_polytope(r, out);
    else if (r.command == "invariants") table_invariants(r, out);
    if (r.parameters.contains("trials")) {
        out << "rejected " << r.rejected << " of " << r.parameters["trials"].get<long>() << " trials\n";
    }
    out << "elapsed " << std::setprecision(3) << std::fixed << r.elapsed_seconds << " s, typrank "
        << r.version << '\n';
    out.unsetf(std::ios::fixed);
}

void render(const RunRecord& record, OutputFormat format, std::ostream& out) {
    switch (format) {
    case OutputFormat::Json: out << to_json_string(record) << '\n'; break;
    case OutputFormat::Csv: render_csv(record, out); break;
    case OutputFormat::Table: render_table(record, out); break;
    }
}

} // namespace typrank::app

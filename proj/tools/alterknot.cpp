// alterknot command-line front end.
//
// Subcommands:
//   analyze     parse a diagram, run the full twist/surface/bounds pipeline
//   census      verify a CSV of knots with externally computed cusp data
//   constants   certify the numeric constant chains with interval arithmetic
//   arc-census  verify the arc-counting bound on the three-cusped surface
//
// Exit codes: 0 success, 2 parse/validation failure, 3 non-hyperbolic input,
// 4 incomplete enumeration, 5 inequality or certification violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "alterknot/census.hpp"
#include "alterknot/report.hpp"

using namespace alterknot;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_parse = 2;
constexpr int exit_nonhyperbolic = 3;
constexpr int exit_incomplete = 4;
constexpr int exit_violation = 5;

void print_error_json(const std::string& kind, const std::string& message) {
    ordered_json j;
    j["schema"] = 1;
    j["error"] = kind;
    j["message"] = message;
    std::cout << j.dump(2) << "\n";
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        if (cell.empty()) continue;
        out.push_back(std::stod(cell));
    }
    if (out.empty()) throw domain_error("empty grid");
    return out;
}

knot_diagram load_diagram(const std::string& pd, const std::string& dt, const std::string& file) {
    int given = (!pd.empty()) + (!dt.empty()) + (!file.empty());
    if (given != 1) throw malformed_code("give exactly one of --pd, --dt, --file");
    if (!pd.empty()) return parse_pd(pd);
    if (!dt.empty()) return parse_dt(dt);
    std::ifstream in(file);
    if (!in) throw malformed_code("cannot open " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw malformed_code("empty input file");
    return text[i] == 'X' ? parse_pd(text) : parse_dt(text);
}

int cmd_analyze(const std::string& pd, const std::string& dt, const std::string& file,
                long threshold, bool json_out) {
    knot_diagram d;
    try {
        d = load_diagram(pd, dt, file);
    } catch (const error& e) {
        print_error_json("parse", e.what());
        return exit_parse;
    }
    diagram_report rep = validate(d);
    ordered_json j;
    j["schema"] = 1;
    j["diagram"] = report_diagram(rep);
    j["dt_canonical"] = dt_to_string(canonical_dt(d));
    if (!rep.alternating || !rep.reduced || !rep.prime) {
        j["error"] = "validation";
        j["message"] = "bounds pipeline needs a prime, reduced, alternating diagram";
        std::cout << j.dump(2) << "\n";
        return exit_parse;
    }
    twist_reduction tr = twist_reduce(d);
    std::vector<twist_region> regs = detect_twist_regions(tr.diagram);
    long tw = static_cast<long>(regs.size());
    j["flypes_applied"] = static_cast<long>(tr.moves.size());
    j["tw"] = tw;
    if (tw < 2) {
        j["error"] = "non-hyperbolic";
        j["message"] = "a single twist region closes to a (2,q) torus knot";
        std::cout << j.dump(2) << "\n";
        return exit_nonhyperbolic;
    }
    long n_eff = std::max(threshold, static_cast<long>(twisted_homotopy_min_n));
    augmented_family af = augment(tr.diagram, n_eff);
    auto [red, blue] = checkerboards(tr.diagram);
    bool exceptional = is_exceptional_knot(d);
    bounds_report bounds = main_bounds(static_cast<double>(tw));
    if (exceptional) bounds = mark_exceptional(bounds);

    j["threshold_n"] = n_eff;
    j["threshold_clamped"] = (n_eff != threshold);
    j["twist_regions"] = report_regions(af.regions);  // carries encircled flags
    j["checkerboard"] = ordered_json::array({report_surface(red), report_surface(blue)});
    j["checkerboard_cusp_lower"] = round12(checkerboard_cusp_lower(tr.diagram.n, exceptional));
    j["twisted_cusp_lower"] = round12(twisted_cusp_lower(tw, exceptional));
    j["augmented"] = report_augmented(af);
    j["bounds"] = report_bounds(bounds, json_out);
    std::cout << j.dump(2) << "\n";
    return exit_ok;
}

int cmd_census(const std::string& path, const std::string& out_path) {
    std::ifstream in(path);
    if (!in) {
        print_error_json("parse", "cannot open " + path);
        return exit_parse;
    }
    census_parse cp;
    try {
        cp = parse_census_csv(in);
    } catch (const error& e) {
        print_error_json("schema", e.what());
        return exit_parse;
    }
    std::ofstream out(out_path, std::ios::app);  // results are append-only
    long checked = 0, violations = 0, skipped = static_cast<long>(cp.row_errors.size());
    for (const auto& msg : cp.row_errors) std::cerr << "skipped: " << msg << "\n";
    for (const auto& row : cp.rows) {
        verification_result v = verify_census_row(row);
        ordered_json j = report_verification(v);
        out << j.dump() << "\n";
        if (!v.error.empty()) {
            ++skipped;
            std::cerr << "skipped: " << row.name << ": " << v.error << "\n";
            continue;
        }
        ++checked;
        bool bad = (v.sandwich_ok && !*v.sandwich_ok) || (v.meridian_ok && !*v.meridian_ok);
        if (bad) {
            ++violations;
            std::cerr << "violation: " << row.name << "\n";
        }
    }
    ordered_json summary;
    summary["schema"] = 1;
    summary["rows_checked"] = checked;
    summary["rows_skipped"] = skipped;
    summary["violations"] = violations;
    summary["results_file"] = out_path;
    std::cout << summary.dump(2) << "\n";
    return violations == 0 ? exit_ok : exit_violation;
}

int cmd_constants(bool verify, bool json_out, long threshold) {
    derivation a = derive_constant_A();
    derivation b = derive_constant_B();
    thm_bounded_constants t29 = derive_constants_bounded(threshold);
    derivation fin = finiteness_threshold_check();

    std::vector<trace_step> all;
    for (const auto* dv : {&a, &b}) all.insert(all.end(), dv->trace.begin(), dv->trace.end());
    all.insert(all.end(), t29.dv.trace.begin(), t29.dv.trace.end());
    all.insert(all.end(), fin.trace.begin(), fin.trace.end());
    bool pass = a.all_pass && b.all_pass && t29.dv.all_pass && fin.all_pass;

    if (json_out) {
        ordered_json j;
        j["schema"] = 1;
        j["precision_digits"] = interval_decimal_digits();
        j["A"] = a.value.str(static_cast<int>(interval_decimal_digits()));
        j["B"] = b.value.str(static_cast<int>(interval_decimal_digits()));
        j["trace"] = report_trace(all);
        j["all_pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("certified constants (interval arithmetic at %ld decimal digits)\n",
                    interval_decimal_digits());
        for (const auto& s : all)
            std::printf("  %-28s %-28s %-22s %s\n", s.name.c_str(), s.lo.c_str(),
                        s.relation.c_str(), s.pass ? "PASS" : "FAIL");
        std::printf("A  in %s\nB  in %s\n", a.value.str(20).c_str(), b.value.str(20).c_str());
        std::printf("%s\n", pass ? "all constants certified" : "CERTIFICATION FAILED");
    }
    if (verify && !pass) return exit_violation;
    return exit_ok;
}

int cmd_arc_census(const std::string& t_grid_csv, const std::string& d_grid_csv, long qmax,
                   const std::string& out_path) {
    std::vector<double> t_grid = parse_grid(t_grid_csv);
    std::vector<double> d_grid = parse_grid(d_grid_csv);
    double dmax = *std::max_element(d_grid.begin(), d_grid.end());
    if (qmax <= 0) qmax = arc_enumeration_qmax(dmax);
    arc_theorem_report rep;
    try {
        rep = verify_arc_theorem(t_grid, d_grid, qmax);
    } catch (const incomplete_enumeration& e) {
        print_error_json("incomplete-enumeration", e.what());
        return exit_incomplete;
    }
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out_path.empty()) {
        f.open(out_path);
        os = &f;
    }
    (*os) << "t, d, k, formula, achieved, pass\n";
    char buf[128];
    for (const auto& r : rep.rows) {
        std::snprintf(buf, sizeof buf, "%g, %g, %.4f, %.4f, %d, %s\n", r.t, r.d, r.k, r.formula,
                      r.achieved, r.pass ? "pass" : "fail");
        (*os) << buf;
    }
    return rep.all_pass ? exit_ok : exit_violation;
}

} // namespace

int main(int argc, char** argv) {
    if (const char* p = std::getenv("ALTERKNOT_PRECISION")) {
        try {
            set_interval_precision(std::stol(p));
        } catch (const std::exception& e) {
            std::cerr << "bad ALTERKNOT_PRECISION: " << e.what() << "\n";
            return exit_parse;
        }
    }

    CLI::App app{"diagrammatic cusp bounds for alternating knots"};
    app.require_subcommand(1);

    std::string pd, dt, file, csv, out = "census_results.jsonl";
    std::string t_grid = "0.25,0.5,0.75,1.0", d_grid = "0.1,0.25,0.5,1.0,2.0", arc_out;
    long threshold = twisted_homotopy_min_n, qmax = 0;
    bool json_out = false, verify = false;

    auto* analyze = app.add_subcommand("analyze", "analyze one diagram");
    analyze->add_option("--pd", pd, "PD code, e.g. \"X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]\"");
    analyze->add_option("--dt", dt, "DT code, e.g. \"4 6 8 2\"");
    analyze->add_option("--file", file, "file holding a PD or DT code");
    analyze->add_option("--threshold", threshold, "augmentation threshold N (clamped to >= 121)");
    analyze->add_flag("--json", json_out, "include the full derivation trace");

    auto* census = app.add_subcommand("census", "verify a census CSV");
    census->add_option("csv", csv, "census CSV path")->required();
    census->add_option("--out", out, "append-only JSONL results path");

    auto* constants = app.add_subcommand("constants", "certify the constant chains");
    constants->add_flag("--verify", verify, "exit nonzero unless every step certifies");
    constants->add_flag("--json", json_out, "machine-readable trace");
    constants->add_option("--threshold", threshold, "N for the per-region chain");

    auto* arc = app.add_subcommand("arc-census", "verify the arc-counting bound");
    arc->add_option("--t-grid", t_grid, "comma-separated horoball scales in (0,1]");
    arc->add_option("--d-grid", d_grid, "comma-separated arc length parameters d");
    arc->add_option("--qmax", qmax, "denominator bound (default: completeness rule)");
    arc->add_option("--out", arc_out, "write rows to a file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(pd, dt, file, threshold, json_out);
        if (*census) return cmd_census(csv, out);
        if (*constants) return cmd_constants(verify, json_out, threshold);
        if (*arc) return cmd_arc_census(t_grid, d_grid, qmax, arc_out);
    } catch (const derivation_mismatch& e) {
        print_error_json("derivation-mismatch", e.what());
        return exit_violation;
    } catch (const incomplete_enumeration& e) {
        print_error_json("incomplete-enumeration", e.what());
        return exit_incomplete;
    } catch (const error& e) {
        print_error_json("parse", e.what());
        return exit_parse;
    } catch (const std::exception& e) {
        print_error_json("internal", e.what());
        return exit_parse;
    }
    return exit_ok;
}

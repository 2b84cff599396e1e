#ifndef ALTERKNOT_CENSUS_HPP
#define ALTERKNOT_CENSUS_HPP

// Census ingestion and per-knot verification.
//
// CSV schema (header required):
//   name,dt_code,crossings,twist_number,cusp_area,meridian_length
// with empty cells for the optional trailing fields. Cusp areas and meridian
// lengths are external inputs computed ahead of time from the hyperbolic
// structures; this module only checks them against the diagrammatic bounds.

#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alterknot/report.hpp"
#include "alterknot/surfaces.hpp"

namespace alterknot {

struct census_row {
    std::string name;
    std::string dt_code;
    long crossings = 0;
    std::optional<long> twist_number;
    std::optional<double> cusp_area;
    std::optional<double> meridian_length;
};

struct census_parse {
    std::vector<census_row> rows;
    std::vector<std::string> row_errors;  // per bad row: message with line number
};

inline census_parse parse_census_csv(std::istream& in) {
    census_parse out;
    std::string line;
    if (!std::getline(in, line)) throw schema_error("empty census file");
    auto strip = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
        size_t i = 0;
        while (i < s.size() && s[i] == ' ') ++i;
        return s.substr(i);
    };
    if (strip(line) != "name,dt_code,crossings,twist_number,cusp_area,meridian_length")
        throw schema_error("census header mismatch");
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string l = strip(line);
        if (l.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(l);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(strip(cell));
        if (l.back() == ',') cells.push_back("");
        try {
            if (cells.size() != 6) throw schema_error("expected 6 cells");
            census_row r;
            r.name = cells[0];
            r.dt_code = cells[1];
            if (r.name.empty() || r.dt_code.empty()) throw schema_error("name/dt_code required");
            r.crossings = std::stol(cells[2]);
            if (r.crossings < 3) throw schema_error("crossings must be >= 3");
            if (!cells[3].empty()) r.twist_number = std::stol(cells[3]);
            if (!cells[4].empty()) {
                r.cusp_area = std::stod(cells[4]);
                if (!(*r.cusp_area > 0)) throw schema_error("cusp_area must be > 0");
            }
            if (!cells[5].empty()) {
                r.meridian_length = std::stod(cells[5]);
                if (!(*r.meridian_length > 0 && *r.meridian_length < 3))
                    throw schema_error("meridian_length must be in (0, 3)");
            }
            out.rows.push_back(std::move(r));
        } catch (const std::exception& e) {
            out.row_errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

struct verification_result {
    std::string name;
    long tw = 0;
    bool exceptional = false;
    bounds_report bounds;
    std::optional<bool> sandwich_ok;       // unset when no cusp_area given
    std::optional<bool> meridian_ok;       // unset when no meridian given
    std::optional<bool> twist_number_ok;   // unset when no independent tw given
    double margin_lower = 0, margin_upper = 0;
    std::string timestamp;  // UTC, set when the row is verified
    std::string error;      // nonempty when the row could not be processed
};

inline std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

// Run the full diagram pipeline on one census row and check the cusp-area
// sandwich A(tw-2) <= area < 10 sqrt(3) (tw-1) plus the meridian ceiling.
inline verification_result verify_census_row(const census_row& row) {
    verification_result v;
    v.name = row.name;
    v.timestamp = utc_timestamp();
    try {
        knot_diagram d = parse_dt(row.dt_code);
        if (d.n != row.crossings)
            throw schema_error("crossing count disagrees with the DT code");
        diagram_report rep = validate(d);
        if (!rep.alternating || !rep.reduced || !rep.prime)
            throw schema_error("census rows must be prime reduced alternating diagrams");
        twist_reduction tr = twist_reduce(d);
        v.tw = static_cast<long>(detect_twist_regions(tr.diagram).size());
        if (v.tw < 2) throw schema_error("not hyperbolic: a single twist region");
        if (row.twist_number) v.twist_number_ok = (*row.twist_number == v.tw);
        v.exceptional = is_exceptional_knot(d);
        v.bounds = main_bounds(static_cast<double>(v.tw));
        if (v.exceptional) v.bounds = mark_exceptional(v.bounds);
        if (row.cusp_area) {
            double area = *row.cusp_area;
            v.sandwich_ok = (v.bounds.cusp_area_lower <= area) && (area < v.bounds.cusp_area_upper);
            v.margin_lower = area - v.bounds.cusp_area_lower;
            v.margin_upper = v.bounds.cusp_area_upper - area;
        }
        if (row.meridian_length) v.meridian_ok = (*row.meridian_length < 3.0);
    } catch (const std::exception& e) {
        v.error = e.what();
    }
    return v;
}

inline ordered_json report_verification(const verification_result& v) {
    ordered_json j;
    j["name"] = v.name;
    if (!v.error.empty()) {
        j["error"] = v.error;
        return j;
    }
    j["tw"] = v.tw;
    j["exceptional"] = v.exceptional;
    j["bounds"] = report_bounds(v.bounds, false);
    if (v.sandwich_ok) {
        j["sandwich_ok"] = *v.sandwich_ok;
        j["margin_lower"] = round12(v.margin_lower);
        j["margin_upper"] = round12(v.margin_upper);
    } else {
        j["sandwich_ok"] = "skipped";
    }
    if (v.meridian_ok) j["meridian_ok"] = *v.meridian_ok;
    if (v.twist_number_ok) j["twist_number_ok"] = *v.twist_number_ok;
    j["timestamp"] = v.timestamp;  // results files are append-only logs
    return j;
}

} // namespace alterknot

#endif

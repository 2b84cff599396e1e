#ifndef ALTERKNOT_REPORT_HPP
#define ALTERKNOT_REPORT_HPP

// JSON report assembly. Reports are byte-stable across runs: ordered keys,
// and every real is rounded to 12 significant digits before it enters the
// document.

#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "alterknot/arc_census.hpp"
#include "alterknot/bounds.hpp"
#include "alterknot/diagram.hpp"
#include "alterknot/surfaces.hpp"
#include "alterknot/twist.hpp"

namespace alterknot {

using ordered_json = nlohmann::ordered_json;

inline double round12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

inline ordered_json report_diagram(const diagram_report& r) {
    ordered_json j;
    j["connected"] = r.connected;
    j["four_valent"] = r.four_valent;
    j["alternating"] = r.alternating;
    j["prime"] = r.prime;
    j["reduced"] = r.reduced;
    j["crossing_count"] = r.crossing_count;
    return j;
}

inline ordered_json report_regions(const std::vector<twist_region>& regs) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : regs) {
        ordered_json j;
        j["crossings"] = r.crossing_ids;
        j["length"] = r.length();
        j["handedness"] = r.handedness;
        j["encircled"] = r.encircled;
        arr.push_back(j);
    }
    return arr;
}

inline ordered_json report_surface(const surface_summary& s) {
    ordered_json j;
    j["color"] = s.color == 0 ? "red" : "blue";
    j["euler"] = s.euler;
    j["pleated_area"] = round12(s.pleated_area);
    j["boundary_slope"] = s.boundary_slope;
    j["twisted"] = s.twisted;
    return j;
}

inline ordered_json report_augmented(const augmented_family& a) {
    ordered_json j;
    j["threshold_n"] = a.threshold_n;
    ordered_json circles = ordered_json::array();
    for (const auto& c : a.circles) {
        ordered_json cj;
        cj["region"] = c.region_id;
        cj["c"] = c.c;
        cj["r"] = c.r;
        cj["n"] = c.n;
        circles.push_back(cj);
    }
    j["crossing_circles"] = circles;
    j["tw_n"] = a.tw_n_count;
    j["k2_crossings"] = a.k2.n;
    j["k2_dt"] = dt_to_string(canonical_dt(a.k2));
    j["twisted_euler_abs"] = a.twisted_euler_abs;
    return j;
}

inline ordered_json report_trace(const std::vector<trace_step>& trace) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : trace) {
        ordered_json j;
        j["name"] = s.name;
        j["enclosure_lo"] = s.lo;
        j["enclosure_hi"] = s.hi;
        j["relation"] = s.relation;
        j["pass"] = s.pass;
        j["note"] = s.note;
        arr.push_back(j);
    }
    return arr;
}

inline ordered_json report_surgery(const surgery_report& s) {
    ordered_json j;
    j["volume_lower"] = round12(s.volume_lower);
    j["volume_upper"] = round12(s.volume_upper);
    j["slope_length_min"] = round12(s.slope_length_min);
    j["fkp_applicable"] = s.fkp_applicable;
    if (s.fkp_applicable)
        j["fkp_factor"] = round12(s.fkp_factor);
    else
        j["fkp_factor"] = "not-applicable";
    j["hyperbolic_guaranteed"] = s.hyperbolic_guaranteed;
    return j;
}

inline ordered_json report_bounds(const bounds_report& b, bool include_trace) {
    ordered_json j;
    j["tw"] = b.tw;
    j["exceptional"] = b.exceptional;
    j["cusp_area_lower"] = round12(b.cusp_area_lower);
    j["cusp_area_upper"] = round12(b.cusp_area_upper);
    j["upper_strict"] = b.upper_strict;
    j["slope_length_lower"] = round12(b.slope_length_lower);
    j["cusp_density_lower"] = round12(b.cusp_density_lower);
    j["cusp_density_vacuous"] = b.cusp_density_vacuous;
    j["surgery"] = report_surgery(b.surgery);
    if (include_trace && b.derivation_trace) j["derivation_trace"] = report_trace(*b.derivation_trace);
    return j;
}

} // namespace alterknot

#endif

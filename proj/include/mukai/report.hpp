#pragma once

#include "mukai/cohomology.hpp"
#include "mukai/config.hpp"
#include "mukai/rings.hpp"
#include "mukai/walls.hpp"

#include <cstdio>
#include <string>

namespace mukai {

// Exact values are authoritative; anything under "display" is a float
// rendering for human eyes only.
inline Json report_skeleton(const std::string& command) {
    Json j;
    j["command"] = command;
    j["inputs"] = Json::object();
    j["results"] = Json::object();
    j["display"] = Json::object();
    j["checks"] = Json::array();
    return j;
}

inline std::string display_float(const Rat& x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", rat_double(x));
    return buf;
}

inline Json coh_json(const CohQ& u) {
    Json j;
    j["r"] = detail::rat_json(u.r);
    j["ns"] = detail::vec_json(u.ns);
    j["rho"] = detail::rat_json(u.s);
    return j;
}

inline Json gauss_json(const Gauss& z) {
    Json j;
    j["re"] = detail::rat_json(z.re);
    j["im"] = detail::rat_json(z.im);
    return j;
}

inline Json key_json(const WallKey& k) {
    Json j = Json::array();
    for (const auto& c : k) j.push_back(c.str());
    return j;
}

inline Json wall_json(const WallProblem& p, const Wall& w) {
    Json j;
    j["key"] = key_json(w.key);
    j["tag"] = tag_str(w.tag);
    j["u"] = coh_json(w.u);
    if (const auto bm = bm_class(p, w.u)) {
        j["bm"] = tag_str(*bm);
    } else if (const auto bm_c = bm_class(p, p.v - w.u)) {
        j["bm"] = std::string("complement:") + tag_str(*bm_c);
    } else {
        j["bm"] = "none";
    }
    return j;
}

inline void add_check(Json& report, const Check& c) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    report["checks"].push_back(j);
}

inline std::string render_json(const Json& report) { return report.dump(2) + "\n"; }

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_scalar(const Json& v) {
    if (v.is_string()) return csv_escape(v.get<std::string>());
    return csv_escape(v.dump());
}

}  // namespace detail

/// One row per wall/charge for array-valued results, key/value rows otherwise.
/// JSON stays the authoritative format.
inline std::string render_csv(const Json& report) {
    std::string tables, scalars;
    for (const auto& [name, value] : report["results"].items()) {
        if (value.is_array() && !value.empty() && value[0].is_object()) {
            std::string header = "index";
            for (const auto& [col, cell] : value[0].items()) header += "," + col;
            tables += header + "\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                std::string row = std::to_string(i);
                for (const auto& [col, cell] : value[i].items())
                    row += "," + detail::csv_scalar(cell);
                tables += row + "\n";
            }
        } else {
            scalars += detail::csv_escape(name) + "," + detail::csv_scalar(value) + "\n";
        }
    }
    std::string out;
    if (!scalars.empty() || tables.empty()) out += "field,value\n" + scalars;
    out += tables;
    return out;
}

}  // namespace mukai

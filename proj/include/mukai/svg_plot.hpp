#pragma once

#include "mukai/rational.hpp"
#include "mukai/walls.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mukai {

namespace detail {

inline std::string fmt2(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace detail

/// Static SVG 1.1 diagram of a wall scan: log-scaled t^2 axis with exact
/// rational tick labels, one labeled vertical line per hit. Byte-deterministic
/// for a fixed scan result.
inline std::string svg_scan_plot(const std::vector<ScanHit>& hits, const Rat& t_max) {
    const double width = 800, height = 360;
    const double left = 70, right = width - 30, base = height - 70, top = 40;

    double lo = 0.0;  // log10(t^2) starts at t^2 = 1
    double hi = std::log10(std::max(rat_double(t_max * t_max), 10.0));
    for (const auto& h : hits) hi = std::max(hi, std::log10(rat_double(h.t2)));
    auto xpos = [&](double logt2) { return left + (right - left) * (logt2 - lo) / (hi - lo); };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         detail::fmt2(width) + "\" height=\"" + detail::fmt2(height) + "\">\n";
    s += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "  <text x=\"" + detail::fmt2(width / 2) + "\" y=\"20\" text-anchor=\"middle\" " +
         "font-family=\"monospace\" font-size=\"14\">wall crossings along t</text>\n";

    // Axes.
    s += "  <line x1=\"" + detail::fmt2(left) + "\" y1=\"" + detail::fmt2(base) + "\" x2=\"" +
         detail::fmt2(right) + "\" y2=\"" + detail::fmt2(base) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "  <line x1=\"" + detail::fmt2(left) + "\" y1=\"" + detail::fmt2(top) + "\" x2=\"" +
         detail::fmt2(left) + "\" y2=\"" + detail::fmt2(base) +
         "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "  <text x=\"" + detail::fmt2(right) + "\" y=\"" + detail::fmt2(base + 34) +
         "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"12\">t^2 (log scale)</text>\n";

    // Endpoint ticks with exact labels.
    auto tick = [&](double x, const std::string& label) {
        s += "  <line x1=\"" + detail::fmt2(x) + "\" y1=\"" + detail::fmt2(base) + "\" x2=\"" +
             detail::fmt2(x) + "\" y2=\"" + detail::fmt2(base + 6) +
             "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        s += "  <text x=\"" + detail::fmt2(x) + "\" y=\"" + detail::fmt2(base + 18) +
             "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">" +
             detail::xml_escape(label) + "</text>\n";
    };
    tick(xpos(0.0), "1");
    tick(xpos(std::log10(rat_double(t_max * t_max))), rat_str(t_max * t_max));

    // One vertical line per hit, labels staggered on two rows.
    for (std::size_t i = 0; i < hits.size(); ++i) {
        const double x = xpos(std::log10(rat_double(hits[i].t2)));
        const double ytext = top + 14 + 16 * static_cast<double>(i % 2);
        s += "  <line x1=\"" + detail::fmt2(x) + "\" y1=\"" + detail::fmt2(top) + "\" x2=\"" +
             detail::fmt2(x) + "\" y2=\"" + detail::fmt2(base) +
             "\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
        s += "  <text x=\"" + detail::fmt2(x + 3) + "\" y=\"" + detail::fmt2(ytext) +
             "\" font-family=\"monospace\" font-size=\"11\">" +
             detail::xml_escape(key_str(hits[i].wall.key) + " t^2=" + rat_str(hits[i].t2)) +
             "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace mukai

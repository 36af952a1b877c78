// output.cpp: CSV, JSON and SVG heatmap emission of sweep results

#include "otto/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace otto::output {

namespace {

using sweep::GridResult;
using sweep::PointRecord;
using json = nlohmann::ordered_json;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string num(const std::optional<double>& v) {
    return v ? num(*v) : std::string();
}

std::string short_num(double v, const char* fmt = "%.4g") {
    char buf[32];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

json opt(const std::optional<double>& v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
}

bool is_nelc(const GridResult& r) {
    return r.config.mode == sweep::Mode::Nelc;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
    out.close();
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::optional<double> field_value(const PointRecord& p, std::string_view field) {
    if (!p.ok()) return std::nullopt;
    if (field == "Q_h") return p.flows.q_h;
    if (field == "Q_c") return p.flows.q_c;
    if (field == "W") return p.flows.w;
    if (field == "figure_of_merit") return p.report.figure_of_merit;
    if (field == "power") return p.report.power;
    if (field == "residual") return p.residual;
    throw std::invalid_argument("unknown svg field '" + std::string(field) + "'");
}

std::string_view regime_fill(const PointRecord& p) {
    if (!p.ok()) return "#bbbbbb";
    switch (p.report.regime) {
    case thermo::Regime::Engine: return kEngineFill;
    case thermo::Regime::Refrigerator: return kRefrigeratorFill;
    case thermo::Regime::None: return kNoneFill;
    }
    return kNoneFill;
}

// Two ramps meeting in white at zero: blue for negative, red for positive.
std::string diverging(double v, double scale) {
    const double s = scale > 0.0 ? std::clamp(v / scale, -1.0, 1.0) : 0.0;
    const auto mix = [](double a, double b, double t) {
        return static_cast<int>(std::lround(a + (b - a) * t));
    };
    int r, g, b;
    if (s >= 0.0) {
        r = mix(255, 178, s); g = mix(255, 24, s); b = mix(255, 43, s);
    } else {
        r = mix(255, 33, -s); g = mix(255, 102, -s); b = mix(255, 172, -s);
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

} // namespace

std::string to_csv(const GridResult& r) {
    std::ostringstream os;
    for (const auto& a : r.config.axes) os << a.name << ',';
    os << "Q_h,Q_c,W,regime,figure_of_merit,power,status";
    if (is_nelc(r)) os << ",residual";
    if (r.tau_scan) os << ",Q_h_gslc,Q_c_gslc,W_gslc,figure_of_merit_gslc,figure_of_merit_elc";
    os << '\n';
    for (const auto& p : r.points) {
        for (double v : p.axis_values) os << num(v) << ',';
        if (p.ok()) {
            os << num(p.flows.q_h) << ',' << num(p.flows.q_c) << ',' << num(p.flows.w) << ','
               << thermo::to_string(p.report.regime) << ',' << num(p.report.figure_of_merit) << ','
               << num(p.report.power) << ',';
        } else {
            os << ",,,,,,";
        }
        os << p.status;
        if (is_nelc(r)) os << ',' << num(p.residual);
        if (r.tau_scan) {
            if (p.gslc_flows) {
                os << ',' << num(p.gslc_flows->q_h) << ',' << num(p.gslc_flows->q_c) << ','
                   << num(p.gslc_flows->w);
            } else {
                os << ",,,";
            }
            os << ',' << num(p.gslc_figure_of_merit) << ',' << num(p.elc_figure_of_merit);
        }
        os << '\n';
    }
    return os.str();
}

std::string to_json(const GridResult& r) {
    const auto& c = r.config;
    json meta;
    meta["artifact_version"] = OTTO_VERSION;
    meta["mode"] = std::string(sweep::to_string(c.mode));
    meta["tau_scan"] = r.tau_scan;
    meta["fixed"] = {{"omega_h", c.omega_h}, {"omega_c", c.omega_c}, {"g_h", c.g_h}, {"g_c", c.g_c},
                     {"beta_h", c.beta_h},   {"beta_c", c.beta_c},   {"tau", c.tau}};
    json bath = {{"gamma", c.gamma}, {"s_exponent", 1.0}};
    if (c.cutoff) {
        bath["cutoff"] = *c.cutoff;
    } else {
        bath["cutoff"] = "auto";
    }
    meta["bath"] = bath;
    meta["averaging"] = {{"enabled", c.averaging.enabled},
                         {"samples", c.averaging.samples},
                         {"window", c.averaging.window}};
    json axes = json::array();
    for (const auto& a : c.axes) {
        axes.push_back({{"name", a.name}, {"min", a.min}, {"max", a.max}, {"count", a.count},
                        {"scale", a.log ? "log" : "linear"}});
    }
    meta["axes"] = axes;
    meta["flow_dead_band"] = "1e-12 * max(omega_h, omega_c)";

    json points = json::array();
    for (const auto& p : r.points) {
        json e;
        for (std::size_t k = 0; k < p.axis_values.size(); ++k) e[c.axes[k].name] = p.axis_values[k];
        if (p.ok()) {
            e["Q_h"] = p.flows.q_h;
            e["Q_c"] = p.flows.q_c;
            e["W"] = p.flows.w;
            e["regime"] = std::string(thermo::to_string(p.report.regime));
        } else {
            e["Q_h"] = nullptr;
            e["Q_c"] = nullptr;
            e["W"] = nullptr;
            e["regime"] = nullptr;
        }
        e["figure_of_merit"] = opt(p.report.figure_of_merit);
        e["power"] = opt(p.report.power);
        if (is_nelc(r)) e["residual"] = opt(p.residual);
        if (r.tau_scan) {
            if (p.gslc_flows) {
                e["Q_h_gslc"] = p.gslc_flows->q_h;
                e["Q_c_gslc"] = p.gslc_flows->q_c;
                e["W_gslc"] = p.gslc_flows->w;
            }
            e["figure_of_merit_gslc"] = opt(p.gslc_figure_of_merit);
            e["figure_of_merit_elc"] = opt(p.elc_figure_of_merit);
        }
        e["status"] = p.status;
        points.push_back(std::move(e));
    }
    json root;
    root["meta"] = std::move(meta);
    root["points"] = std::move(points);
    return root.dump(2) + "\n";
}

std::string to_svg(const GridResult& r, std::string_view field, int width, int height) {
    if (std::find(std::begin(kSvgFields), std::end(kSvgFields), field) == std::end(kSvgFields)) {
        throw std::invalid_argument("unknown svg field '" + std::string(field) + "'");
    }
    const auto& axes = r.config.axes;
    if (axes.size() > 2) throw std::invalid_argument("svg heatmaps need at most two axes");

    // x follows the fastest (last) axis, y the first axis with its minimum at the bottom.
    const int nx = axes.empty() ? 1 : axes.back().count;
    const int ny = axes.size() == 2 ? axes.front().count : 1;
    const bool numeric = field != "regime";

    double scale = 0.0;
    bool has_negative = false;
    if (numeric) {
        for (const auto& p : r.points) {
            if (const auto v = field_value(p, field); v && std::isfinite(*v)) {
                scale = std::max(scale, std::abs(*v));
                has_negative = has_negative || *v < 0.0;
            }
        }
    }

    const double left = 80, right = 190, top = 40, bottom = 70;
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    const double cw = pw / nx;
    const double ch = ph / ny;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
       << "\" style=\"fill:#ffffff;stroke:none\"/>\n";
    os << "<text x=\"" << left << "\" y=\"24\" style=\"font-family:sans-serif;font-size:16px;fill:#000000\">"
       << sweep::to_string(r.config.mode) << ": " << field << "</text>\n";

    for (std::size_t i = 0; i < r.points.size(); ++i) {
        const auto& p = r.points[i];
        const int ix = static_cast<int>(i % nx);
        const int iy = static_cast<int>(i / nx);
        const double x = left + ix * cw;
        const double y = top + (ny - 1 - iy) * ch;
        std::string fill;
        std::string stroke = "none";
        if (numeric) {
            const auto v = field_value(p, field);
            fill = (v && std::isfinite(*v)) ? diverging(*v, scale) : std::string("#bbbbbb");
            if (p.ok() && p.report.regime != thermo::Regime::None) stroke = std::string(regime_fill(p));
        } else {
            fill = std::string(regime_fill(p));
        }
        os << "<rect x=\"" << short_num(x, "%.3f") << "\" y=\"" << short_num(y, "%.3f") << "\" width=\""
           << short_num(cw, "%.3f") << "\" height=\"" << short_num(ch, "%.3f") << "\" style=\"fill:" << fill
           << ";stroke:" << stroke << (stroke == "none" ? "" : ";stroke-width:1") << "\"/>\n";
    }
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << short_num(pw, "%.3f") << "\" height=\""
       << short_num(ph, "%.3f") << "\" style=\"fill:none;stroke:#000000;stroke-width:1\"/>\n";

    const auto label = [&](double x, double y, const std::string& text, const char* anchor) {
        os << "<text x=\"" << short_num(x, "%.3f") << "\" y=\"" << short_num(y, "%.3f")
           << "\" style=\"font-family:sans-serif;font-size:12px;fill:#000000;text-anchor:" << anchor << "\">"
           << text << "</text>\n";
    };
    if (!axes.empty()) {
        const auto& ax = axes.back();
        label(left, top + ph + 18, short_num(ax.min), "start");
        label(left + pw, top + ph + 18, short_num(ax.max), "end");
        label(left + pw / 2, top + ph + 40, ax.name + (ax.log ? " (log)" : ""), "middle");
    }
    if (axes.size() == 2) {
        const auto& ay = axes.front();
        label(left - 8, top + ph, short_num(ay.min), "end");
        label(left - 8, top + 12, short_num(ay.max), "end");
        label(left - 8, top + ph / 2, ay.name + (ay.log ? " (log)" : ""), "end");
    }

    // Legend: regime classes, then the colour scale for numeric fields.
    const double lx = left + pw + 20;
    double ly = top;
    const std::pair<std::string_view, std::string_view> classes[] = {
        {"engine", kEngineFill}, {"refrigerator", kRefrigeratorFill}, {"none", kNoneFill}};
    for (const auto& [name, colour] : classes) {
        os << "<rect x=\"" << short_num(lx, "%.3f") << "\" y=\"" << short_num(ly, "%.3f")
           << "\" width=\"16\" height=\"16\" style=\"fill:" << (numeric ? "none" : colour) << ";stroke:"
           << (numeric && name == "none" ? std::string_view("#999999") : (numeric ? colour : "#000000"))
           << ";stroke-width:1\"/>\n";
        label(lx + 24, ly + 13, std::string(name), "start");
        ly += 24;
    }
    if (numeric) {
        ly += 12;
        const int steps = 40;
        const double bar_h = std::min(ph - (ly - top) - 20, 240.0);
        const double lo = has_negative ? -scale : 0.0;
        for (int k = 0; k < steps; ++k) {
            const double v = scale - (scale - lo) * (k + 0.5) / steps;
            os << "<rect x=\"" << short_num(lx, "%.3f") << "\" y=\"" << short_num(ly + k * bar_h / steps, "%.3f")
               << "\" width=\"20\" height=\"" << short_num(bar_h / steps, "%.3f") << "\" style=\"fill:"
               << diverging(v, scale) << ";stroke:none\"/>\n";
        }
        label(lx + 28, ly + 10, short_num(scale), "start");
        label(lx + 28, ly + bar_h, short_num(lo), "start");
        if (has_negative) label(lx + 28, ly + bar_h / 2 + 4, "0", "start");
    }
    os << "</svg>\n";
    return os.str();
}

void emit_csv(const GridResult& result, const std::string& path) {
    write_file(path, to_csv(result));
}

void emit_json(const GridResult& result, const std::string& path) {
    write_file(path, to_json(result));
}

void emit_svg(const GridResult& result, const std::string& path, std::string_view field, int width, int height) {
    write_file(path, to_svg(result, field, width, height));
}

void emit_declared(const GridResult& result) {
    for (const auto& o : result.config.outputs) {
        switch (o.kind) {
        case sweep::OutputSpec::Kind::Csv: emit_csv(result, o.path); break;
        case sweep::OutputSpec::Kind::Json: emit_json(result, o.path); break;
        case sweep::OutputSpec::Kind::Svg:
            emit_svg(result, o.path, o.field, result.config.svg_width, result.config.svg_height);
            break;
        }
    }
}

} // namespace otto::output

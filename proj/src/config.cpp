// config.cpp: JSON run configurations with flat dotted keys and --set overrides

#include "otto/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "otto/output.hpp"

namespace otto::config {

namespace {

using nlohmann::json;

void flatten_into(const json& node, const std::string& prefix, FlatConfig& out) {
    for (auto it = node.begin(); it != node.end(); ++it) {
        const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            flatten_into(*it, key, out);
        } else {
            out[key] = *it;
        }
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

double to_number(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("'" + key + "': expected a number, got '" + text + "'");
    }
}

double number(const std::string& key, const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return to_number(key, v.get<std::string>());
    throw ConfigError("'" + key + "': expected a number");
}

int integer(const std::string& key, const json& v) {
    const double d = number(key, v);
    if (d != static_cast<int>(d)) throw ConfigError("'" + key + "': expected an integer");
    return static_cast<int>(d);
}

bool boolean(const std::string& key, const json& v) {
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "true" || s == "1") return true;
        if (s == "false" || s == "0") return false;
    }
    if (v.is_number_integer()) return v.get<int>() != 0;
    throw ConfigError("'" + key + "': expected true or false");
}

std::string text(const std::string& key, const json& v) {
    if (!v.is_string()) throw ConfigError("'" + key + "': expected a string");
    return v.get<std::string>();
}

// A list value: JSON array of strings, or one string with ';' separating entries.
std::vector<std::string> string_list(const std::string& key, const json& v) {
    std::vector<std::string> out;
    if (v.is_array()) {
        for (const auto& e : v) out.push_back(text(key, e));
    } else if (v.is_string()) {
        for (auto& s : split(v.get<std::string>(), ';')) {
            if (!s.empty()) out.push_back(s);
        }
    } else {
        throw ConfigError("'" + key + "': expected a list of strings");
    }
    return out;
}

std::string canonical(const std::string& key) {
    if (key.rfind("fixed.", 0) == 0) return key.substr(6);
    return key;
}

} // namespace

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = {
        "mode",          "omega_h",  "omega_c",           "g_h",                "g_c",
        "beta_h",        "beta_c",   "tau",               "bath.gamma",         "bath.cutoff",
        "axes",          "outputs",  "averaging.enabled", "averaging.samples",  "averaging.window",
        "svg.width",     "svg.height", "threads"};
    return keys;
}

FlatConfig flatten(const json& doc) {
    if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");
    FlatConfig out;
    flatten_into(doc, "", out);
    return out;
}

FlatConfig load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config '" + path + "'");
    try {
        return flatten(json::parse(in));
    } catch (const json::exception& e) {
        throw ConfigError("config '" + path + "': " + e.what());
    }
}

void apply_override(FlatConfig& flat, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("--set expects key=value, got '" + assignment + "'");
    }
    const std::string key = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);
    json parsed = json::parse(value, nullptr, false);
    if (parsed.is_discarded()) parsed = value;
    if (parsed.is_object()) {
        FlatConfig nested;
        flatten_into(parsed, key, nested);
        for (auto& [k, v] : nested) flat[k] = v;
    } else {
        flat[key] = parsed;
    }
}

sweep::Axis parse_axis(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() != 4 && parts.size() != 5) {
        throw ConfigError("axis '" + spec + "': expected name:min:max:count[:log]");
    }
    sweep::Axis a;
    a.name = parts[0];
    a.min = to_number("axes", parts[1]);
    a.max = to_number("axes", parts[2]);
    const double n = to_number("axes", parts[3]);
    if (n != static_cast<int>(n)) throw ConfigError("axis '" + spec + "': count must be an integer");
    a.count = static_cast<int>(n);
    if (parts.size() == 5) {
        if (parts[4] == "log") {
            a.log = true;
        } else if (parts[4] != "linear") {
            throw ConfigError("axis '" + spec + "': scale must be log or linear");
        }
    }
    try {
        a.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return a;
}

sweep::OutputSpec parse_output(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ConfigError("output '" + spec + "': expected kind:path");
    const std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    sweep::OutputSpec o;
    if (kind == "csv") {
        o.kind = sweep::OutputSpec::Kind::Csv;
    } else if (kind == "json") {
        o.kind = sweep::OutputSpec::Kind::Json;
    } else if (kind == "svg") {
        o.kind = sweep::OutputSpec::Kind::Svg;
        const auto last = rest.rfind(':');
        if (last != std::string::npos) {
            o.field = rest.substr(last + 1);
            rest = rest.substr(0, last);
        }
        if (std::find(std::begin(output::kSvgFields), std::end(output::kSvgFields), o.field) ==
            std::end(output::kSvgFields)) {
            throw ConfigError("output '" + spec + "': unknown svg field '" + o.field + "'");
        }
    } else {
        throw ConfigError("output '" + spec + "': kind must be csv, json or svg");
    }
    if (rest.empty()) throw ConfigError("output '" + spec + "': empty path");
    o.path = rest;
    return o;
}

sweep::SweepConfig build(const FlatConfig& flat) {
    sweep::SweepConfig c;
    for (const auto& [raw, v] : flat) {
        const std::string key = canonical(raw);
        if (key == "mode") {
            try {
                c.mode = sweep::mode_from_string(text(key, v));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        } else if (key == "omega_h") {
            c.omega_h = number(key, v);
        } else if (key == "omega_c") {
            c.omega_c = number(key, v);
        } else if (key == "g_h") {
            c.g_h = number(key, v);
        } else if (key == "g_c") {
            c.g_c = number(key, v);
        } else if (key == "beta_h") {
            c.beta_h = number(key, v);
        } else if (key == "beta_c") {
            c.beta_c = number(key, v);
        } else if (key == "tau") {
            c.tau = number(key, v);
        } else if (key == "bath.gamma") {
            c.gamma = number(key, v);
        } else if (key == "bath.cutoff") {
            if (v.is_string() && v.get<std::string>() == "auto") {
                c.cutoff.reset();
            } else {
                c.cutoff = number(key, v);
            }
        } else if (key == "axes") {
            c.axes.clear();
            for (const auto& s : string_list(key, v)) c.axes.push_back(parse_axis(s));
        } else if (key == "outputs") {
            c.outputs.clear();
            for (const auto& s : string_list(key, v)) c.outputs.push_back(parse_output(s));
        } else if (key == "averaging.enabled") {
            c.averaging.enabled = boolean(key, v);
        } else if (key == "averaging.samples") {
            c.averaging.samples = integer(key, v);
        } else if (key == "averaging.window") {
            c.averaging.window = number(key, v);
        } else if (key == "svg.width") {
            c.svg_width = integer(key, v);
        } else if (key == "svg.height") {
            c.svg_height = integer(key, v);
        } else if (key == "threads") {
            c.threads = integer(key, v);
        } else {
            throw ConfigError("unknown config key '" + raw + "'");
        }
    }
    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return c;
}

} // namespace otto::config

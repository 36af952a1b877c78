// config.hpp: JSON run configurations with flat dotted keys and --set overrides

#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "otto/sweep.hpp"

namespace otto::config {

// Unknown keys, malformed values and unreadable files; maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using FlatConfig = std::map<std::string, nlohmann::json>;

// Nested objects become dotted keys ({"bath": {"gamma": 1}} -> "bath.gamma").
FlatConfig flatten(const nlohmann::json& doc);

FlatConfig load_file(const std::string& path);

// "key=value"; the value is read as JSON when it parses, else as a string.
void apply_override(FlatConfig& flat, const std::string& assignment);

// "name:min:max:count[:log]"
sweep::Axis parse_axis(const std::string& spec);

// "csv:path", "json:path" or "svg:path[:field]"
sweep::OutputSpec parse_output(const std::string& spec);

sweep::SweepConfig build(const FlatConfig& flat);

// Every accepted key.
const std::vector<std::string>& known_keys();

} // namespace otto::config

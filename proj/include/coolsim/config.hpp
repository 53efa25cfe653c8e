#pragma once

#include <string>

#include "coolsim/sim.hpp"

namespace coolsim {

/// Parses a JSON scenario configuration. Missing keys take their defaults;
/// unknown keys, bad types and out-of-range values throw
/// std::invalid_argument naming the offending key.
ScenarioConfig parse_config_json(const std::string& text);

/// Reads and parses a config file. Throws std::runtime_error on I/O failure.
ScenarioConfig load_config_file(const std::string& path);

/// Serializes a config so that parse_config_json(dump_config_json(c)) == c.
std::string dump_config_json(const ScenarioConfig& config);

/// Applies a single textual override (same keys as the JSON schema, values
/// in plain text, e.g. "scheme"/"market-a" or "resource"/"unlimited").
void apply_config_override(ScenarioConfig& config, const std::string& key,
                           const std::string& value);

} // namespace coolsim

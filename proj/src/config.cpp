#include "coolsim/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coolsim {

namespace {

using nlohmann::json;

const std::set<std::string> kKnownKeys = {
    "scheme",         "offices",          "eta",
    "thermal_resistance", "thermal_capacitance", "f_min",
    "f_max",          "resource",         "step_hours",
    "orientations",   "pipe_order",       "beta",
    "alpha",          "start_minute",     "duration_minutes",
    "initial_temperature", "setpoint",    "seed",
    "eps",
};

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
    throw std::invalid_argument(key + ": " + why);
}

double as_number(const json& j, const std::string& key) {
    if (!j.is_number()) bad_key(key, "expected a number");
    return j.get<double>();
}

std::vector<double> as_per_office(const json& j, const std::string& key) {
    if (j.is_number()) return {j.get<double>()};
    if (j.is_array()) {
        std::vector<double> v;
        v.reserve(j.size());
        for (const json& e : j) {
            if (!e.is_number()) bad_key(key, "expected numbers");
            v.push_back(e.get<double>());
        }
        if (v.empty()) bad_key(key, "array must not be empty");
        return v;
    }
    bad_key(key, "expected a number or an array of numbers");
}

} // namespace

ScenarioConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");

    for (const auto& [key, _] : j.items()) {
        if (!kKnownKeys.contains(key)) bad_key(key, "unknown key");
    }

    ScenarioConfig cfg;

    if (j.contains("offices")) {
        const double n = as_number(j["offices"], "offices");
        if (n < 1 || n != static_cast<double>(static_cast<int>(n)))
            bad_key("offices", "expected a positive integer");
        cfg.building = BuildingParams::defaults(static_cast<int>(n));
    }

    if (j.contains("scheme")) {
        if (!j["scheme"].is_string()) bad_key("scheme", "expected a string");
        const auto s = scheme_from_name(j["scheme"].get<std::string>());
        if (!s) bad_key("scheme", "unknown scheme name");
        cfg.scheme = *s;
    }

    if (j.contains("eta")) cfg.building.eta = as_number(j["eta"], "eta");
    if (j.contains("thermal_resistance"))
        cfg.building.thermal_resistance = as_number(j["thermal_resistance"], "thermal_resistance");
    if (j.contains("thermal_capacitance"))
        cfg.building.thermal_capacitance = as_number(j["thermal_capacitance"], "thermal_capacitance");
    if (j.contains("f_min")) cfg.building.f_min = as_number(j["f_min"], "f_min");
    if (j.contains("f_max")) cfg.building.f_max = as_number(j["f_max"], "f_max");
    if (j.contains("step_hours")) cfg.building.step_hours = as_number(j["step_hours"], "step_hours");

    if (j.contains("resource")) {
        const json& r = j["resource"];
        if (r.is_string() && r.get<std::string>() == "unlimited")
            cfg.building.resource_input.reset();
        else if (r.is_number())
            cfg.building.resource_input = r.get<double>();
        else
            bad_key("resource", "expected a number or \"unlimited\"");
    }

    if (j.contains("orientations")) {
        const json& arr = j["orientations"];
        if (!arr.is_array()) bad_key("orientations", "expected an array of facings");
        std::vector<Orientation> os;
        os.reserve(arr.size());
        for (const json& e : arr) {
            if (!e.is_string()) bad_key("orientations", "expected strings");
            const auto o = orientation_from_name(e.get<std::string>());
            if (!o) bad_key("orientations", "unknown facing " + e.get<std::string>());
            os.push_back(*o);
        }
        cfg.building.orientations = std::move(os);
    }

    if (j.contains("pipe_order")) {
        const json& arr = j["pipe_order"];
        if (!arr.is_array()) bad_key("pipe_order", "expected an array of office indices");
        std::vector<int> order;
        order.reserve(arr.size());
        for (const json& e : arr) {
            if (!e.is_number_integer()) bad_key("pipe_order", "expected integers");
            order.push_back(e.get<int>());
        }
        cfg.building.pipe_order = std::move(order);
    }

    if (j.contains("beta")) cfg.beta = as_number(j["beta"], "beta");
    if (j.contains("alpha")) cfg.alpha = as_number(j["alpha"], "alpha");
    if (j.contains("start_minute")) {
        cfg.start_minute = static_cast<std::int64_t>(as_number(j["start_minute"], "start_minute"));
    }
    if (j.contains("duration_minutes")) {
        cfg.duration_minutes =
            static_cast<std::int64_t>(as_number(j["duration_minutes"], "duration_minutes"));
    }
    if (j.contains("initial_temperature"))
        cfg.initial_temps = as_per_office(j["initial_temperature"], "initial_temperature");
    if (j.contains("setpoint")) cfg.setpoints = as_per_office(j["setpoint"], "setpoint");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
            bad_key("seed", "expected an integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("eps")) cfg.eps = as_number(j["eps"], "eps");

    cfg.validate();
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_json(buf.str());
}

std::string dump_config_json(const ScenarioConfig& config) {
    json j;
    j["scheme"] = scheme_name(config.scheme);
    j["offices"] = config.building.n_offices;
    j["eta"] = config.building.eta;
    j["thermal_resistance"] = config.building.thermal_resistance;
    j["thermal_capacitance"] = config.building.thermal_capacitance;
    j["f_min"] = config.building.f_min;
    j["f_max"] = config.building.f_max;
    if (config.building.resource_input)
        j["resource"] = *config.building.resource_input;
    else
        j["resource"] = "unlimited";
    j["step_hours"] = config.building.step_hours;

    const BuildingParams standard = BuildingParams::defaults(config.building.n_offices);
    if (config.building.orientations != standard.orientations) {
        json arr = json::array();
        for (Orientation o : config.building.orientations) arr.push_back(orientation_name(o));
        j["orientations"] = std::move(arr);
    }
    if (config.building.pipe_order != standard.pipe_order) j["pipe_order"] = config.building.pipe_order;

    j["beta"] = config.beta;
    if (config.alpha) j["alpha"] = *config.alpha;
    j["start_minute"] = config.start_minute;
    j["duration_minutes"] = config.duration_minutes;
    auto per_office = [](const std::vector<double>& v) -> json {
        if (v.size() == 1) return v.front();
        return v;
    };
    j["initial_temperature"] = per_office(config.initial_temps);
    j["setpoint"] = per_office(config.setpoints);
    j["seed"] = config.seed;
    j["eps"] = config.eps;
    return j.dump(2);
}

void apply_config_override(ScenarioConfig& config, const std::string& key,
                           const std::string& value) {
    if (!kKnownKeys.contains(key)) bad_key(key, "unknown key");
    if (key == "orientations" || key == "pipe_order")
        bad_key(key, "only settable through a config file");

    json j;
    if (key == "scheme") {
        j[key] = value;
    } else if (key == "resource" && value == "unlimited") {
        j[key] = value;
    } else {
        try {
            const json parsed = json::parse(value);
            if (!parsed.is_number()) bad_key(key, "expected a number");
            j[key] = parsed;
        } catch (const json::parse_error&) {
            bad_key(key, "expected a number");
        }
    }

    // Route through the parser so the override gets the same validation as
    // a config file would.
    json full = json::parse(dump_config_json(config));
    full[key] = j[key];
    config = parse_config_json(full.dump());
}

} // namespace coolsim

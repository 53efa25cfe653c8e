#include "coolsim.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "coolsim/config.hpp"
#include "coolsim/csv.hpp"
#include "coolsim/sim.hpp"

struct coolsim_config {
    coolsim::ScenarioConfig cfg;
};

struct coolsim_trace {
    coolsim::SimTrace trace;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Maps the core's exception vocabulary onto status codes. Parse problems are
// flagged by the "config:" prefix the parser uses; clearing failures carry
// their fixed messages.
coolsim_status classify_runtime(const std::string& what) {
    if (what.find("no feasible reallocation") != std::string::npos ||
        what.find("bracket not found") != std::string::npos)
        return COOLSIM_E_INFEASIBLE;
    if (what.find("cannot open") != std::string::npos ||
        what.find("write failed") != std::string::npos)
        return COOLSIM_E_IO;
    return COOLSIM_E_INTERNAL;
}

template <typename Fn>
coolsim_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        const std::string what = e.what();
        return what.rfind("config:", 0) == 0 ? COOLSIM_E_PARSE : COOLSIM_E_INVALID;
    } catch (const std::runtime_error& e) {
        set_error(e.what());
        return classify_runtime(e.what());
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return COOLSIM_E_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return COOLSIM_E_INTERNAL;
    }
}

coolsim_status require(bool ok, const char* msg) {
    if (ok) return COOLSIM_OK;
    set_error(msg);
    return COOLSIM_E_INVALID;
}

const coolsim::TraceRecord* record_at(const coolsim_trace* trace, int64_t step) {
    if (!trace) return nullptr;
    if (step < 0 || step >= static_cast<int64_t>(trace->trace.records.size())) return nullptr;
    return &trace->trace.records[static_cast<std::size_t>(step)];
}

} // namespace

extern "C" {

const char* coolsim_version(void) { return coolsim::kVersion; }

const char* coolsim_strerror(int status) {
    switch (status) {
    case COOLSIM_OK: return "ok";
    case COOLSIM_E_INVALID: return "invalid argument";
    case COOLSIM_E_PARSE: return "parse error";
    case COOLSIM_E_INFEASIBLE: return "infeasible";
    case COOLSIM_E_IO: return "i/o error";
    case COOLSIM_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* coolsim_last_error(void) { return g_last_error.c_str(); }

coolsim_status coolsim_config_create(coolsim_config** out) {
    if (auto rc = require(out != nullptr, "out is null")) return rc;
    return guarded([&] {
        *out = new coolsim_config{};
        return COOLSIM_OK;
    });
}

coolsim_status coolsim_config_parse_json(const char* json_text, coolsim_config** out) {
    if (auto rc = require(json_text && out, "null argument")) return rc;
    return guarded([&] {
        auto cfg = coolsim::parse_config_json(json_text);
        *out = new coolsim_config{std::move(cfg)};
        return COOLSIM_OK;
    });
}

coolsim_status coolsim_config_load_file(const char* path, coolsim_config** out) {
    if (auto rc = require(path && out, "null argument")) return rc;
    return guarded([&] {
        auto cfg = coolsim::load_config_file(path);
        *out = new coolsim_config{std::move(cfg)};
        return COOLSIM_OK;
    });
}

coolsim_status coolsim_config_set(coolsim_config* cfg, const char* key, const char* value) {
    if (auto rc = require(cfg && key && value, "null argument")) return rc;
    return guarded([&] {
        coolsim::apply_config_override(cfg->cfg, key, value);
        return COOLSIM_OK;
    });
}

coolsim_status coolsim_config_dump_json(const coolsim_config* cfg, char** out_text) {
    if (auto rc = require(cfg && out_text, "null argument")) return rc;
    return guarded([&] {
        const std::string text = coolsim::dump_config_json(cfg->cfg);
        char* buf = new char[text.size() + 1];
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out_text = buf;
        return COOLSIM_OK;
    });
}

void coolsim_config_destroy(coolsim_config* cfg) { delete cfg; }

void coolsim_string_free(char* text) { delete[] text; }

coolsim_status coolsim_run(const coolsim_config* cfg, coolsim_trace** out) {
    if (auto rc = require(cfg && out, "null argument")) return rc;
    return guarded([&] {
        auto trace = coolsim::run_scenario(cfg->cfg);
        *out = new coolsim_trace{std::move(trace)};
        return COOLSIM_OK;
    });
}

coolsim_status coolsim_compare(const coolsim_config* const* cfgs, int32_t count,
                               coolsim_trace** out_traces) {
    if (auto rc = require(cfgs && out_traces && count > 0, "need at least one config")) return rc;
    return guarded([&] {
        std::vector<coolsim::ScenarioConfig> configs;
        configs.reserve(static_cast<std::size_t>(count));
        for (int32_t i = 0; i < count; ++i) {
            if (!cfgs[i]) {
                set_error("null config in comparison");
                return COOLSIM_E_INVALID;
            }
            configs.push_back(cfgs[i]->cfg);
        }
        auto traces = coolsim::run_comparison(configs);
        for (int32_t i = 0; i < count; ++i)
            out_traces[i] = new coolsim_trace{std::move(traces[static_cast<std::size_t>(i)])};
        return COOLSIM_OK;
    });
}

void coolsim_trace_destroy(coolsim_trace* trace) { delete trace; }

int64_t coolsim_trace_steps(const coolsim_trace* trace) {
    return trace ? static_cast<int64_t>(trace->trace.records.size()) : 0;
}

const char* coolsim_trace_scheme(const coolsim_trace* trace) {
    return trace ? coolsim::scheme_name(trace->trace.config.scheme) : "";
}

coolsim_status coolsim_trace_stddev(const coolsim_trace* trace, int64_t step, double* out) {
    const auto* rec = record_at(trace, step);
    if (auto rc = require(rec && out, "step out of range")) return rc;
    *out = rec->measure.stddev;
    return COOLSIM_OK;
}

coolsim_status coolsim_trace_mean_deviation(const coolsim_trace* trace, int64_t step,
                                            double* out) {
    const auto* rec = record_at(trace, step);
    if (auto rc = require(rec && out, "step out of range")) return rc;
    *out = rec->measure.mean_deviation;
    return COOLSIM_OK;
}

coolsim_status coolsim_trace_price(const coolsim_trace* trace, int64_t step, double* out) {
    const auto* rec = record_at(trace, step);
    if (auto rc = require(rec && out, "step out of range")) return rc;
    *out = rec->price;
    return COOLSIM_OK;
}

coolsim_status coolsim_trace_temperature(const coolsim_trace* trace, int64_t step,
                                         int32_t office, double* out) {
    const auto* rec = record_at(trace, step);
    if (auto rc = require(rec && out, "step out of range")) return rc;
    if (auto rc = require(office >= 0 && office < static_cast<int32_t>(rec->temps.size()),
                          "office out of range"))
        return rc;
    *out = rec->temps[static_cast<std::size_t>(office)];
    return COOLSIM_OK;
}

coolsim_status coolsim_trace_control(const coolsim_trace* trace, int64_t step, int32_t office,
                                     double* out) {
    const auto* rec = record_at(trace, step);
    if (auto rc = require(rec && out, "step out of range")) return rc;
    if (auto rc = require(office >= 0 && office < static_cast<int32_t>(rec->control.size()),
                          "office out of range"))
        return rc;
    *out = rec->control[static_cast<std::size_t>(office)];
    return COOLSIM_OK;
}

coolsim_status coolsim_trace_window_mean(const coolsim_trace* trace, int64_t from, int64_t to,
                                         double* out) {
    if (auto rc = require(trace && out, "null argument")) return rc;
    return guarded([&] {
        const auto end = to < 0 ? trace->trace.records.size() : static_cast<std::size_t>(to);
        *out = trace->trace.window_stddev_mean(static_cast<std::size_t>(from), end);
        return COOLSIM_OK;
    });
}

coolsim_status coolsim_trace_write_csv(const coolsim_trace* trace, const char* path,
                                       int32_t per_office) {
    if (auto rc = require(trace && path, "null argument")) return rc;
    return guarded([&] {
        coolsim::write_trace_csv(trace->trace, path, per_office != 0);
        return COOLSIM_OK;
    });
}

coolsim_status coolsim_summary_write_csv(const coolsim_trace* const* traces, int32_t count,
                                         const char* path) {
    if (auto rc = require(traces && path && count > 0, "need at least one trace")) return rc;
    return guarded([&] {
        std::vector<coolsim::SimTrace> list;
        list.reserve(static_cast<std::size_t>(count));
        for (int32_t i = 0; i < count; ++i) {
            if (!traces[i]) {
                set_error("null trace in summary");
                return COOLSIM_E_INVALID;
            }
            list.push_back(traces[i]->trace);
        }
        coolsim::write_summary_csv(list, path);
        return COOLSIM_OK;
    });
}

coolsim_status coolsim_sweep_write_csv(const coolsim_trace* const* traces,
                                       const char* const* values, int32_t count,
                                       const char* param, const char* path) {
    if (auto rc = require(traces && values && param && path && count > 0, "null argument"))
        return rc;
    return guarded([&] {
        std::vector<coolsim::SimTrace> list;
        std::vector<std::string> vals;
        list.reserve(static_cast<std::size_t>(count));
        vals.reserve(static_cast<std::size_t>(count));
        for (int32_t i = 0; i < count; ++i) {
            if (!traces[i] || !values[i]) {
                set_error("null entry in sweep");
                return COOLSIM_E_INVALID;
            }
            list.push_back(traces[i]->trace);
            vals.emplace_back(values[i]);
        }
        coolsim::write_sweep_csv(list, param, vals, path);
        return COOLSIM_OK;
    });
}

} // extern "C"

// Command-line front end for the coolsim shared library. Talks to the
// simulator exclusively through the C API in coolsim.h.

#include <coolsim.h>

#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

namespace {

namespace fs = std::filesystem;

struct ConfigDeleter {
    void operator()(coolsim_config* c) const { coolsim_config_destroy(c); }
};
struct TraceDeleter {
    void operator()(coolsim_trace* t) const { coolsim_trace_destroy(t); }
};
using ConfigPtr = std::unique_ptr<coolsim_config, ConfigDeleter>;
using TracePtr = std::unique_ptr<coolsim_trace, TraceDeleter>;

[[noreturn]] void fail(coolsim_status rc) {
    std::fprintf(stderr, "error: %s: %s\n", coolsim_strerror(rc), coolsim_last_error());
    std::exit(1);
}

void check(coolsim_status rc) {
    if (rc != COOLSIM_OK) fail(rc);
}

// Scenario options shared by all subcommands. Values stay as strings and are
// pushed through the library so flag and config-file validation agree.
struct ScenarioOpts {
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;

    void add_to(CLI::App& cmd, bool with_scheme) {
        cmd.add_option("--config", config_path, "JSON scenario configuration file");
        auto bind = [this, &cmd](const std::string& flag, const std::string& key,
                                 const std::string& help) {
            cmd.add_option_function<std::string>(
                flag,
                [this, key](const std::string& v) { overrides.emplace_back(key, v); }, help);
        };
        if (with_scheme) bind("--scheme", "scheme", "allocation scheme");
        bind("--alpha", "alpha", "auction strength (market-a schemes)");
        bind("--beta", "beta", "controller gain");
        bind("--resource", "resource", "cooling power at the pipe head, or 'unlimited'");
        bind("--offices", "offices", "number of offices");
        bind("--seed", "seed", "64-bit scenario seed");
        bind("--start-minute", "start_minute", "scenario start, minutes since midnight");
        bind("--duration", "duration_minutes", "scenario length in minutes");
        bind("--setpoint", "setpoint", "setpoint temperature for every office");
        bind("--eps", "eps", "equilibrium clearing tolerance");
    }

    ConfigPtr build() const {
        coolsim_config* raw = nullptr;
        if (config_path.empty())
            check(coolsim_config_create(&raw));
        else
            check(coolsim_config_load_file(config_path.c_str(), &raw));
        ConfigPtr cfg(raw);
        for (const auto& [key, value] : overrides)
            check(coolsim_config_set(cfg.get(), key.c_str(), value.c_str()));
        return cfg;
    }
};

TracePtr run_config(const coolsim_config* cfg) {
    coolsim_trace* raw = nullptr;
    check(coolsim_run(cfg, &raw));
    return TracePtr(raw);
}

void report(const coolsim_trace* trace) {
    double mean = 0.0;
    check(coolsim_trace_window_mean(trace, 0, -1, &mean));
    std::printf("%-26s steps=%lld  window_mean_stddev=%.9g\n", coolsim_trace_scheme(trace),
                static_cast<long long>(coolsim_trace_steps(trace)), mean);
}

int cmd_run(const ScenarioOpts& opts, const std::string& out, bool per_office) {
    ConfigPtr cfg = opts.build();
    TracePtr trace = run_config(cfg.get());
    check(coolsim_trace_write_csv(trace.get(), out.c_str(), per_office ? 1 : 0));
    report(trace.get());
    std::printf("wrote %s\n", out.c_str());
    return 0;
}

int cmd_compare(const ScenarioOpts& opts, const std::vector<std::string>& schemes,
                const std::string& out_dir, bool per_office) {
    fs::create_directories(out_dir);

    std::vector<ConfigPtr> configs;
    std::vector<const coolsim_config*> raw_configs;
    for (const std::string& scheme : schemes) {
        ConfigPtr cfg = opts.build();
        check(coolsim_config_set(cfg.get(), "scheme", scheme.c_str()));
        raw_configs.push_back(cfg.get());
        configs.push_back(std::move(cfg));
    }

    std::vector<coolsim_trace*> raw_traces(configs.size(), nullptr);
    check(coolsim_compare(raw_configs.data(), static_cast<int32_t>(raw_configs.size()),
                          raw_traces.data()));
    std::vector<TracePtr> traces;
    for (coolsim_trace* t : raw_traces) traces.emplace_back(t);

    for (const TracePtr& trace : traces) {
        const fs::path path = fs::path(out_dir) / (std::string(coolsim_trace_scheme(trace.get())) + ".csv");
        check(coolsim_trace_write_csv(trace.get(), path.string().c_str(), per_office ? 1 : 0));
        report(trace.get());
    }
    const fs::path summary = fs::path(out_dir) / "summary.csv";
    check(coolsim_summary_write_csv(const_cast<const coolsim_trace* const*>(raw_traces.data()),
                                    static_cast<int32_t>(raw_traces.size()),
                                    summary.string().c_str()));
    std::printf("wrote %s\n", summary.string().c_str());
    return 0;
}

int cmd_sweep(const ScenarioOpts& opts, const std::string& param,
              const std::vector<std::string>& values, const std::string& out_dir,
              bool per_office) {
    fs::create_directories(out_dir);

    std::vector<TracePtr> traces;
    std::vector<const coolsim_trace*> raw_traces;
    std::vector<const char*> value_ptrs;
    for (const std::string& value : values) {
        ConfigPtr cfg = opts.build();
        check(coolsim_config_set(cfg.get(), param.c_str(), value.c_str()));
        TracePtr trace = run_config(cfg.get());
        const fs::path path = fs::path(out_dir) / (param + "_" + value + ".csv");
        check(coolsim_trace_write_csv(trace.get(), path.string().c_str(), per_office ? 1 : 0));
        std::printf("%s=%-10s ", param.c_str(), value.c_str());
        report(trace.get());
        raw_traces.push_back(trace.get());
        value_ptrs.push_back(value.c_str());
        traces.push_back(std::move(trace));
    }
    const fs::path summary = fs::path(out_dir) / "sweep.csv";
    check(coolsim_sweep_write_csv(raw_traces.data(), value_ptrs.data(),
                                  static_cast<int32_t>(raw_traces.size()), param.c_str(),
                                  summary.string().c_str()));
    std::printf("wrote %s\n", summary.string().c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coolsim - building climate control under constrained cooling resources"};
    app.set_version_flag("--version", coolsim_version());
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "simulate one scenario and write its trace CSV");
    ScenarioOpts run_opts;
    run_opts.add_to(*run, true);
    std::string run_out = "trace.csv";
    bool run_per_office = false;
    run->add_option("--out", run_out, "output CSV path");
    run->add_flag("--per-office", run_per_office, "add per-office temperature columns");

    // compare
    auto* compare = app.add_subcommand(
        "compare", "run several schemes on identical weather and summarize");
    ScenarioOpts cmp_opts;
    cmp_opts.add_to(*compare, false);
    std::vector<std::string> cmp_schemes;
    std::string cmp_out = "compare";
    bool cmp_per_office = false;
    compare->add_option("--scheme", cmp_schemes, "scheme to include (repeatable)")->required();
    compare->add_option("--out", cmp_out, "output directory");
    compare->add_flag("--per-office", cmp_per_office, "add per-office temperature columns");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "vary one configuration key across runs");
    ScenarioOpts sweep_opts;
    sweep_opts.add_to(*sweep, true);
    std::string sweep_param = "resource";
    std::vector<std::string> sweep_values;
    std::string sweep_out = "sweep";
    bool sweep_per_office = false;
    sweep->add_option("--param", sweep_param, "configuration key to vary");
    sweep->add_option("--values", sweep_values, "comma-separated values")
        ->required()
        ->delimiter(',');
    sweep->add_option("--out", sweep_out, "output directory");
    sweep->add_flag("--per-office", sweep_per_office, "add per-office temperature columns");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_opts, run_out, run_per_office);
        if (compare->parsed()) return cmd_compare(cmp_opts, cmp_schemes, cmp_out, cmp_per_office);
        if (sweep->parsed())
            return cmd_sweep(sweep_opts, sweep_param, sweep_values, sweep_out, sweep_per_office);
    } catch (const fs::filesystem_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}

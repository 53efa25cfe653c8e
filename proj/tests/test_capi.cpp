#include <doctest.h>

#include <coolsim.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

namespace {

std::string slurp(const char* path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

coolsim_config* small_config(const char* scheme) {
    coolsim_config* cfg = nullptr;
    REQUIRE(coolsim_config_create(&cfg) == COOLSIM_OK);
    REQUIRE(coolsim_config_set(cfg, "offices", "10") == COOLSIM_OK);
    REQUIRE(coolsim_config_set(cfg, "resource", "14") == COOLSIM_OK);
    REQUIRE(coolsim_config_set(cfg, "duration_minutes", "30") == COOLSIM_OK);
    REQUIRE(coolsim_config_set(cfg, "seed", "11") == COOLSIM_OK);
    REQUIRE(coolsim_config_set(cfg, "scheme", scheme) == COOLSIM_OK);
    return cfg;
}

} // namespace

TEST_CASE("version and status strings") {
    CHECK(std::strlen(coolsim_version()) > 0);
    CHECK(std::string(coolsim_strerror(COOLSIM_OK)) == "ok");
    CHECK(std::string(coolsim_strerror(COOLSIM_E_PARSE)) == "parse error");
    CHECK(std::strlen(coolsim_strerror(999)) > 0);
}

TEST_CASE("config lifecycle: create, set, dump, parse") {
    coolsim_config* cfg = nullptr;
    REQUIRE(coolsim_config_create(&cfg) == COOLSIM_OK);
    CHECK(coolsim_config_set(cfg, "scheme", "market-a") == COOLSIM_OK);
    CHECK(coolsim_config_set(cfg, "alpha", "64") == COOLSIM_OK);

    char* text = nullptr;
    REQUIRE(coolsim_config_dump_json(cfg, &text) == COOLSIM_OK);
    REQUIRE(text != nullptr);
    CHECK(std::string(text).find("market-a") != std::string::npos);

    coolsim_config* back = nullptr;
    REQUIRE(coolsim_config_parse_json(text, &back) == COOLSIM_OK);
    char* text2 = nullptr;
    REQUIRE(coolsim_config_dump_json(back, &text2) == COOLSIM_OK);
    CHECK(std::string(text) == text2);

    coolsim_string_free(text);
    coolsim_string_free(text2);
    coolsim_config_destroy(cfg);
    coolsim_config_destroy(back);
}

TEST_CASE("errors carry a status and a detail message") {
    coolsim_config* cfg = nullptr;
    CHECK(coolsim_config_parse_json("{", &cfg) == COOLSIM_E_PARSE);
    CHECK(std::strlen(coolsim_last_error()) > 0);

    CHECK(coolsim_config_parse_json(R"({"volume": 11})", &cfg) == COOLSIM_E_INVALID);
    CHECK(std::string(coolsim_last_error()).find("volume") != std::string::npos);

    REQUIRE(coolsim_config_create(&cfg) == COOLSIM_OK);
    CHECK(coolsim_config_set(cfg, "eta", "2.0") == COOLSIM_E_INVALID);
    CHECK(std::string(coolsim_last_error()).find("eta") != std::string::npos);

    CHECK(coolsim_config_load_file("missing_file.json", &cfg) == COOLSIM_E_IO);
    coolsim_config_destroy(cfg);

    // null-safety
    CHECK(coolsim_config_create(nullptr) == COOLSIM_E_INVALID);
    coolsim_config_destroy(nullptr);
    coolsim_trace_destroy(nullptr);
    coolsim_string_free(nullptr);
}

TEST_CASE("run a scenario and inspect the trace") {
    coolsim_config* cfg = small_config("control-a");
    coolsim_trace* trace = nullptr;
    REQUIRE(coolsim_run(cfg, &trace) == COOLSIM_OK);
    CHECK(coolsim_trace_steps(trace) == 30);
    CHECK(std::string(coolsim_trace_scheme(trace)) == "control-a");

    double x = 0.0;
    CHECK(coolsim_trace_stddev(trace, 0, &x) == COOLSIM_OK);
    CHECK(x >= 0.0);
    CHECK(coolsim_trace_temperature(trace, 29, 9, &x) == COOLSIM_OK);
    CHECK(x > 0.0);
    CHECK(coolsim_trace_control(trace, 29, 0, &x) == COOLSIM_OK);
    CHECK(x >= 0.0);
    CHECK(x <= 3.0);
    CHECK(coolsim_trace_price(trace, 0, &x) == COOLSIM_OK);
    CHECK(std::isnan(x));  // controllers carry no market price
    CHECK(coolsim_trace_window_mean(trace, 0, -1, &x) == COOLSIM_OK);
    CHECK(x >= 0.0);

    CHECK(coolsim_trace_stddev(trace, 30, &x) == COOLSIM_E_INVALID);
    CHECK(coolsim_trace_temperature(trace, 0, 10, &x) == COOLSIM_E_INVALID);

    coolsim_trace_destroy(trace);
    coolsim_config_destroy(cfg);
}

TEST_CASE("trace CSV is written and stable through the C API") {
    coolsim_config* cfg = small_config("market-a");
    coolsim_trace* trace = nullptr;
    REQUIRE(coolsim_run(cfg, &trace) == COOLSIM_OK);

    REQUIRE(coolsim_trace_write_csv(trace, "capi_a.csv", 0) == COOLSIM_OK);
    REQUIRE(coolsim_trace_write_csv(trace, "capi_b.csv", 0) == COOLSIM_OK);
    CHECK(slurp("capi_a.csv") == slurp("capi_b.csv"));
    std::remove("capi_a.csv");
    std::remove("capi_b.csv");

    CHECK(coolsim_trace_write_csv(trace, "no_such_dir/x.csv", 0) == COOLSIM_E_IO);

    coolsim_trace_destroy(trace);
    coolsim_config_destroy(cfg);
}

TEST_CASE("comparison shares weather and writes a summary") {
    coolsim_config* a = small_config("control-a");
    coolsim_config* b = small_config("market-a");
    const coolsim_config* cfgs[2] = {a, b};
    coolsim_trace* traces[2] = {nullptr, nullptr};
    REQUIRE(coolsim_compare(cfgs, 2, traces) == COOLSIM_OK);

    REQUIRE(coolsim_summary_write_csv(traces, 2, "capi_summary.csv") == COOLSIM_OK);
    const std::string summary = slurp("capi_summary.csv");
    CHECK(summary.find("control-a,") != std::string::npos);
    CHECK(summary.find("market-a,") != std::string::npos);
    std::remove("capi_summary.csv");

    coolsim_trace_destroy(traces[0]);
    coolsim_trace_destroy(traces[1]);

    // mismatched buildings are refused
    REQUIRE(coolsim_config_set(b, "offices", "20") == COOLSIM_OK);
    coolsim_trace* bad[2] = {nullptr, nullptr};
    CHECK(coolsim_compare(cfgs, 2, bad) == COOLSIM_E_INVALID);

    coolsim_config_destroy(a);
    coolsim_config_destroy(b);
}

TEST_CASE("sweep summary through the C API") {
    coolsim_config* base = small_config("control-a");
    std::vector<coolsim_trace*> traces;
    const char* values[2] = {"10", "14"};
    for (const char* v : values) {
        coolsim_config* cfg = small_config("control-a");
        REQUIRE(coolsim_config_set(cfg, "resource", v) == COOLSIM_OK);
        coolsim_trace* t = nullptr;
        REQUIRE(coolsim_run(cfg, &t) == COOLSIM_OK);
        traces.push_back(t);
        coolsim_config_destroy(cfg);
    }
    REQUIRE(coolsim_sweep_write_csv(traces.data(), values, 2, "resource", "capi_sweep.csv") ==
            COOLSIM_OK);
    const std::string sweep = slurp("capi_sweep.csv");
    CHECK(sweep.find("resource,10,control-a,") != std::string::npos);
    std::remove("capi_sweep.csv");

    for (coolsim_trace* t : traces) coolsim_trace_destroy(t);
    coolsim_config_destroy(base);
}

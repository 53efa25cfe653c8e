#include "coolsim/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace coolsim {

namespace {

void write_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace

std::string format_g9(double value) {
    if (std::isnan(value)) return {};
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

std::string trace_csv_string(const SimTrace& trace, bool per_office) {
    std::string out = "minute,scheme,stddev,mean_deviation,price";
    if (per_office) {
        const int n = trace.config.building.n_offices;
        char col[16];
        for (int o = 0; o < n; ++o) {
            std::snprintf(col, sizeof col, ",T%03d", o);
            out += col;
        }
    }
    out += '\n';

    const char* scheme = scheme_name(trace.config.scheme);
    for (const TraceRecord& rec : trace.records) {
        out += std::to_string(rec.minute);
        out += ',';
        out += scheme;
        out += ',';
        out += format_g9(rec.measure.stddev);
        out += ',';
        out += format_g9(rec.measure.mean_deviation);
        out += ',';
        out += format_g9(rec.price);
        if (per_office) {
            for (double t : rec.temps) {
                out += ',';
                out += format_g9(t);
            }
        }
        out += '\n';
    }
    return out;
}

void write_trace_csv(const SimTrace& trace, const std::string& path, bool per_office) {
    write_file(trace_csv_string(trace, per_office), path);
}

std::string summary_csv_string(std::span<const SimTrace> traces) {
    std::string out = "scheme,window_mean_stddev\n";
    for (const SimTrace& t : traces) {
        out += scheme_name(t.config.scheme);
        out += ',';
        out += format_g9(t.window_stddev_mean());
        out += '\n';
    }
    return out;
}

void write_summary_csv(std::span<const SimTrace> traces, const std::string& path) {
    write_file(summary_csv_string(traces), path);
}

std::string sweep_csv_string(std::span<const SimTrace> traces, const std::string& param,
                             std::span<const std::string> values) {
    if (traces.size() != values.size())
        throw std::invalid_argument("sweep: one value per trace required");
    std::string out = "param,value,scheme,window_mean_stddev\n";
    for (std::size_t i = 0; i < traces.size(); ++i) {
        out += param;
        out += ',';
        out += values[i];
        out += ',';
        out += scheme_name(traces[i].config.scheme);
        out += ',';
        out += format_g9(traces[i].window_stddev_mean());
        out += '\n';
    }
    return out;
}

void write_sweep_csv(std::span<const SimTrace> traces, const std::string& param,
                     std::span<const std::string> values, const std::string& path) {
    write_file(sweep_csv_string(traces, param, values), path);
}

} // namespace coolsim

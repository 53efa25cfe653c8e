#pragma once

#include <span>
#include <string>

#include "coolsim/sim.hpp"

namespace coolsim {

/// Formats a double with 9 significant digits, '.' decimal separator,
/// locale-independent. NaN renders as an empty string (used for the price
/// column on steps without a market price).
std::string format_g9(double value);

/// Trace CSV: header "minute,scheme,stddev,mean_deviation,price" plus
/// per-office temperature columns T000.. when requested; one row per
/// interval. Byte-stable for a given trace.
std::string trace_csv_string(const SimTrace& trace, bool per_office = false);
void write_trace_csv(const SimTrace& trace, const std::string& path, bool per_office = false);

/// Comparison summary: "scheme,window_mean_stddev", one row per trace.
std::string summary_csv_string(std::span<const SimTrace> traces);
void write_summary_csv(std::span<const SimTrace> traces, const std::string& path);

/// Sweep summary: "param,value,scheme,window_mean_stddev".
std::string sweep_csv_string(std::span<const SimTrace> traces, const std::string& param,
                             std::span<const std::string> values);
void write_sweep_csv(std::span<const SimTrace> traces, const std::string& param,
                     std::span<const std::string> values, const std::string& path);

} // namespace coolsim

#pragma once

#include <cstdint>
#include <span>

namespace coolsim {

/// The per-interval performance measure: population standard deviation of
/// the office deviations from their setpoints, mean deviation removed. Adding
/// a constant to every temperature leaves it unchanged.
struct StepMeasure {
    std::int64_t interval = 0;
    double stddev = 0.0;
    double mean_deviation = 0.0;  // <T> - <T_setp>
};

/// Throws std::invalid_argument("no offices") on empty input.
StepMeasure stddev_deviation(std::span<const double> temps, std::span<const double> setpoints);

/// Arithmetic mean of stddev over records [from, to). Throws on an empty or
/// out-of-range window.
double window_mean(std::span<const StepMeasure> trace, std::size_t from, std::size_t to);

} // namespace coolsim

#include "coolsim/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace coolsim {

StepMeasure stddev_deviation(std::span<const double> temps, std::span<const double> setpoints) {
    if (temps.empty() || temps.size() != setpoints.size())
        throw std::invalid_argument("no offices");

    const auto n = static_cast<double>(temps.size());
    double dev_sum = 0.0;
    for (std::size_t o = 0; o < temps.size(); ++o) dev_sum += temps[o] - setpoints[o];
    const double mean_dev = dev_sum / n;

    double sq_sum = 0.0;
    for (std::size_t o = 0; o < temps.size(); ++o) {
        const double d = (temps[o] - setpoints[o]) - mean_dev;
        sq_sum += d * d;
    }

    StepMeasure m;
    m.stddev = std::sqrt(sq_sum / n);
    m.mean_deviation = mean_dev;
    return m;
}

double window_mean(std::span<const StepMeasure> trace, std::size_t from, std::size_t to) {
    if (from >= to || to > trace.size())
        throw std::invalid_argument("window_mean: empty or out-of-range window");
    double sum = 0.0;
    for (std::size_t i = from; i < to; ++i) sum += trace[i].stddev;
    return sum / static_cast<double>(to - from);
}

} // namespace coolsim

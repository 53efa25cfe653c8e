#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "coolsim/metrics.hpp"
#include "coolsim/rng.hpp"

using namespace coolsim;
using doctest::Approx;

TEST_CASE("zero spread when every office sits on its setpoint") {
    const std::vector<double> temps = {20.0, 23.5, 18.0};
    const StepMeasure m = stddev_deviation(temps, temps);
    CHECK(m.stddev == 0.0);
    CHECK(m.mean_deviation == 0.0);
}

TEST_CASE("two-office hand evaluation") {
    const std::vector<double> setp = {20.0, 20.0};
    const StepMeasure m = stddev_deviation(std::vector<double>{21.0, 19.0}, setp);
    CHECK(m.stddev == Approx(1.0).epsilon(1e-12));
    CHECK(m.mean_deviation == Approx(0.0));
}

TEST_CASE("the measure ignores the mean deviation") {
    const std::vector<double> setp = {20.0, 20.0};
    const StepMeasure m = stddev_deviation(std::vector<double>{22.0, 20.0}, setp);
    CHECK(m.stddev == Approx(1.0).epsilon(1e-12));
    CHECK(m.mean_deviation == Approx(1.0));
}

TEST_CASE("empty input is rejected") {
    CHECK_THROWS_WITH_AS(stddev_deviation({}, {}), "no offices", std::invalid_argument);
}

TEST_CASE("shift invariance and scaling of the spread") {
    SplitMix64 rng(17);
    for (int round = 0; round < 20; ++round) {
        std::vector<double> temps(10), setp(10);
        for (std::size_t o = 0; o < 10; ++o) {
            temps[o] = 20.0 + 4.0 * (rng.next_double() - 0.5);
            setp[o] = 19.0 + 2.0 * rng.next_double();
        }
        const double base = stddev_deviation(temps, setp).stddev;

        std::vector<double> shifted = temps;
        for (double& t : shifted) t += 7.25;
        CHECK(stddev_deviation(shifted, setp).stddev == Approx(base).epsilon(1e-9));

        const double k = 3.0;
        std::vector<double> scaled(10);
        for (std::size_t o = 0; o < 10; ++o) scaled[o] = setp[o] + k * (temps[o] - setp[o]);
        CHECK(stddev_deviation(scaled, setp).stddev == Approx(k * base).epsilon(1e-9));
    }
}

TEST_CASE("window mean over step measures") {
    std::vector<StepMeasure> trace(6);
    for (std::size_t i = 0; i < trace.size(); ++i) trace[i].stddev = 0.5;
    CHECK(window_mean(trace, 0, 6) == Approx(0.5));

    trace[2].stddev = 1.0;
    trace[3].stddev = 3.0;
    CHECK(window_mean(trace, 2, 4) == Approx(2.0));

    CHECK_THROWS_AS(window_mean(trace, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(window_mean(trace, 0, 7), std::invalid_argument);
}

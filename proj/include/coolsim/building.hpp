#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "coolsim/rng.hpp"

namespace coolsim {

enum class Orientation : int { East = 0, South = 1, West = 2, North = 3 };

const char* orientation_name(Orientation o);
std::optional<Orientation> orientation_from_name(std::string_view name);

/// Static physical and topological parameters of the office pipe. Offices sit
/// on a single cold-air pipe; each can consume at most the fraction eta of
/// the resource passing its position, and what it takes is gone for everyone
/// downstream.
struct BuildingParams {
    int n_offices = 100;
    double eta = 0.5;
    double thermal_resistance = 10.0;   // R, per office
    double thermal_capacitance = 10.0;  // C, per office
    double f_min = 0.0;
    double f_max = 3.0;
    /// Cooling power inserted at the pipe head; nullopt means unlimited.
    std::optional<double> resource_input = 140.0;
    double step_hours = 1.0 / 60.0;
    std::vector<Orientation> orientations;  // one per office
    std::vector<int> pipe_order;            // permutation of 0..n_offices-1

    /// Default building: orientations split evenly East/South/West/North in
    /// contiguous blocks, pipe order = index order.
    static BuildingParams defaults(int n_offices = 100);

    bool unlimited() const { return !resource_input.has_value(); }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool operator==(const BuildingParams&) const = default;
};

/// Per-office dynamic state.
struct OfficeState {
    double temperature = 20.0;
    double control_signal = 0.0;
    double setpoint = 20.0;
};

/// One interval of synthesized weather.
struct WeatherSample {
    double outdoor = 0.0;
    std::array<double, 4> sun{};       // indexed by Orientation
    std::vector<double> fluct;         // per office, standard normal
    std::vector<double> virtual_temp;  // outdoor + sun[orientation] + fluct
};

/// Outcome of pushing the requested control signals through the pipe.
struct PowerAllocation {
    std::vector<double> available;  // resource seen at each office's pipe position
    std::vector<double> consumed;
    std::vector<double> heat_in;    // (T_virt - T)/R diagnostic, filled by the sim step
};

/// Diurnal outdoor temperature at a given interval; varies between 22 and 35
/// with the peak at hour 16. The hour-of-day argument is wrapped with a
/// non-negative modulus so early-morning intervals land on the previous
/// evening's tail.
double outdoor_temp(std::int64_t interval, double step_hours);

/// Sun load for one facade. East/South/West peak at hours 8/12/16 with
/// amplitudes 8/15/8; North-facing offices get none.
double sun_component(Orientation o, std::int64_t interval, double step_hours);

/// Builds a WeatherSample from an externally supplied fluctuation vector
/// (size n_offices). Lets tests pin the noise.
WeatherSample assemble_weather(const BuildingParams& params, std::int64_t interval,
                               std::vector<double> fluct);

/// Draws one standard-normal fluctuation per office and assembles the sample.
WeatherSample sample_weather(const BuildingParams& params, std::int64_t interval,
                             SplitMix64& rng);

/// One-interval temperature update for a single office:
///   T = (1 / (1 + 1/(R C))) * (T_prev + (T_virt/R - P_cons)/C)
double step_temperature(double t_prev, double t_virt, double p_cons, double r, double c);

/// Walks the pipe in pipe_order; each office consumes
/// min(request, eta * available) and the remainder flows on. Requests are
/// indexed by office, not pipe position. With unlimited input every request
/// is met in full.
PowerAllocation pipeline_allocate(std::span<const double> requests, const BuildingParams& params);

} // namespace coolsim

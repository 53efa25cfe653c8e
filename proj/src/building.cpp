#include "coolsim/building.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace coolsim {

namespace {

double wrap24(double hours) {
    double m = std::fmod(hours, 24.0);
    return m < 0.0 ? m + 24.0 : m;
}

} // namespace

const char* orientation_name(Orientation o) {
    switch (o) {
    case Orientation::East: return "east";
    case Orientation::South: return "south";
    case Orientation::West: return "west";
    case Orientation::North: return "north";
    }
    return "?";
}

std::optional<Orientation> orientation_from_name(std::string_view name) {
    if (name == "east") return Orientation::East;
    if (name == "south") return Orientation::South;
    if (name == "west") return Orientation::West;
    if (name == "north") return Orientation::North;
    return std::nullopt;
}

BuildingParams BuildingParams::defaults(int n_offices) {
    BuildingParams p;
    p.n_offices = n_offices;
    p.orientations.resize(static_cast<std::size_t>(n_offices));
    for (int o = 0; o < n_offices; ++o) {
        // contiguous quarters: E, S, W, N
        p.orientations[static_cast<std::size_t>(o)] =
            static_cast<Orientation>(static_cast<long long>(o) * 4 / n_offices);
    }
    p.pipe_order.resize(static_cast<std::size_t>(n_offices));
    for (int o = 0; o < n_offices; ++o) p.pipe_order[static_cast<std::size_t>(o)] = o;
    return p;
}

void BuildingParams::validate() const {
    if (n_offices <= 0) throw std::invalid_argument("offices: must be positive");
    if (!(eta > 0.0) || eta > 1.0) throw std::invalid_argument("eta: must be in (0, 1]");
    if (!(thermal_resistance > 0.0)) throw std::invalid_argument("thermal_resistance: must be positive");
    if (!(thermal_capacitance > 0.0)) throw std::invalid_argument("thermal_capacitance: must be positive");
    if (!(f_min <= f_max)) throw std::invalid_argument("f_min: must not exceed f_max");
    if (!(step_hours > 0.0)) throw std::invalid_argument("step_hours: must be positive");
    if (resource_input && !(*resource_input >= 0.0))
        throw std::invalid_argument("resource: must be non-negative or unlimited");
    const auto n = static_cast<std::size_t>(n_offices);
    if (orientations.size() != n) throw std::invalid_argument("orientations: need one entry per office");
    if (pipe_order.size() != n) throw std::invalid_argument("pipe_order: need one entry per office");
    std::vector<char> seen(n, 0);
    for (int idx : pipe_order) {
        if (idx < 0 || idx >= n_offices || seen[static_cast<std::size_t>(idx)])
            throw std::invalid_argument("pipe_order: must be a permutation of office indices");
        seen[static_cast<std::size_t>(idx)] = 1;
    }
}

double outdoor_temp(std::int64_t interval, double step_hours) {
    const double arg = wrap24(static_cast<double>(interval) * step_hours - 4.0) - 12.0;
    return 22.0 + 13.0 * std::exp(-arg * arg / 20.0);
}

double sun_component(Orientation o, std::int64_t interval, double step_hours) {
    const double t = static_cast<double>(interval) * step_hours;
    switch (o) {
    case Orientation::East: {
        const double arg = wrap24(t + 4.0) - 12.0;
        return 8.0 * std::exp(-arg * arg / 5.0);
    }
    case Orientation::South: {
        const double arg = wrap24(t) - 12.0;
        return 15.0 * std::exp(-arg * arg / 5.0);
    }
    case Orientation::West: {
        const double arg = wrap24(t - 4.0) - 12.0;
        return 8.0 * std::exp(-arg * arg / 5.0);
    }
    case Orientation::North:
        return 0.0;
    }
    return 0.0;
}

WeatherSample assemble_weather(const BuildingParams& params, std::int64_t interval,
                               std::vector<double> fluct) {
    WeatherSample w;
    w.outdoor = outdoor_temp(interval, params.step_hours);
    for (int k = 0; k < 4; ++k)
        w.sun[static_cast<std::size_t>(k)] =
            sun_component(static_cast<Orientation>(k), interval, params.step_hours);
    w.fluct = std::move(fluct);
    w.virtual_temp.resize(w.fluct.size());
    for (std::size_t o = 0; o < w.fluct.size(); ++o) {
        const auto facing = static_cast<std::size_t>(params.orientations[o]);
        w.virtual_temp[o] = w.outdoor + w.sun[facing] + w.fluct[o];
    }
    return w;
}

WeatherSample sample_weather(const BuildingParams& params, std::int64_t interval,
                             SplitMix64& rng) {
    std::vector<double> fluct(static_cast<std::size_t>(params.n_offices));
    for (double& f : fluct) f = rng.next_gaussian();
    return assemble_weather(params, interval, std::move(fluct));
}

double step_temperature(double t_prev, double t_virt, double p_cons, double r, double c) {
    return (1.0 / (1.0 + 1.0 / (r * c))) * (t_prev + (t_virt / r - p_cons) / c);
}

PowerAllocation pipeline_allocate(std::span<const double> requests, const BuildingParams& params) {
    const auto n = static_cast<std::size_t>(params.n_offices);
    PowerAllocation out;
    out.available.assign(n, 0.0);
    out.consumed.assign(n, 0.0);
    out.heat_in.assign(n, 0.0);

    double avail = params.unlimited() ? std::numeric_limits<double>::infinity()
                                      : *params.resource_input;
    for (int office : params.pipe_order) {
        const auto o = static_cast<std::size_t>(office);
        out.available[o] = avail;
        const double take = std::clamp(requests[o], 0.0, params.eta * avail);
        out.consumed[o] = take;
        avail -= take;  // stays +inf in the unlimited case
    }
    return out;
}

} // namespace coolsim

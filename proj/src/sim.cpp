#include "coolsim/sim.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coolsim/controllers.hpp"
#include "coolsim/market_eq.hpp"
#include "coolsim/market_hc.hpp"

namespace coolsim {

namespace {

constexpr double kNoPrice = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxFixedPointIters = 500;
constexpr double kFixedPointTol = 1e-13;

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

bool is_hc_scheme(Scheme s) {
    switch (s) {
    case Scheme::MarketA:
    case Scheme::MarketA_NoMoney:
    case Scheme::MarketA_NoTemperature:
    case Scheme::MarketA_NoAuction:
        return true;
    default:
        return false;
    }
}

HcVariant hc_variant(Scheme s) {
    switch (s) {
    case Scheme::MarketA_NoMoney: return HcVariant::NoMoney;
    case Scheme::MarketA_NoTemperature: return HcVariant::NoTemperature;
    case Scheme::MarketA_NoAuction: return HcVariant::NoAuction;
    default: return HcVariant::Original;
    }
}

// The integral-control and equilibrium-market laws are written against the
// interval's own temperature, which itself depends on the consumed power the
// law decides. Those mutually dependent equations are solved exactly here:
// per office the coupled update
//
//   F = clamp(f_prev + beta * (T - setpoint) + shift, f_min, f_max)
//   P = clamp(F, 0, cap)          (cap = eta * available at the pipe position)
//   T = g - q * P                 (g, q from the thermal step equation)
//
// has a unique fixed point because the wanted control falls as consumption
// rises. The closed interior solution is checked against the clamp and cap
// pins; when a pin binds, consumption is fixed and the control recomputed
// explicitly, which stays on the same side of the pin.
struct PipeSolution {
    std::vector<double> temps;
    std::vector<double> control;
};

PipeSolution solve_control_pipe(const BuildingParams& bp, std::span<const double> temps_prev,
                                std::span<const double> virt, std::span<const double> f_prev,
                                std::span<const double> setpoints, double beta, double shift) {
    const auto n = static_cast<std::size_t>(bp.n_offices);
    const double rc = bp.thermal_resistance * bp.thermal_capacitance;
    const double a = 1.0 / (1.0 + 1.0 / rc);
    const double q = a / bp.thermal_capacitance;

    PipeSolution out;
    out.temps.resize(n);
    out.control.resize(n);

    double avail = bp.unlimited() ? std::numeric_limits<double>::infinity()
                                  : *bp.resource_input;
    for (int office : bp.pipe_order) {
        const auto o = static_cast<std::size_t>(office);
        const double g = a * (temps_prev[o] + virt[o] / rc);
        const double cap = bp.eta * avail;

        const double interior =
            (f_prev[o] + beta * (g - setpoints[o]) + shift) / (1.0 + beta * q);
        double f = std::clamp(interior, bp.f_min, bp.f_max);
        double p = std::clamp(f, 0.0, cap);
        if (p != f) {
            const double t_pinned = g - q * p;
            f = std::clamp(f_prev[o] + beta * (t_pinned - setpoints[o]) + shift, bp.f_min,
                           bp.f_max);
        }
        out.control[o] = f;
        out.temps[o] = g - q * p;
        avail -= p;
    }
    return out;
}

// Scalar fixed-point drivers for the schemes whose shift couples the offices:
// the global-data controller through the mean temperature, the equilibrium
// market through the clearing price. Both maps contract with ratio about
// beta*q / (1 + beta*q) < 1.
PipeSolution solve_control_b(const BuildingParams& bp, std::span<const double> temps_prev,
                             std::span<const double> virt, std::span<const double> f_prev,
                             std::span<const double> setpoints, double beta,
                             double mean_setp) {
    double mu = mean_of(temps_prev);
    PipeSolution sol;
    for (int iter = 0; iter < kMaxFixedPointIters; ++iter) {
        sol = solve_control_pipe(bp, temps_prev, virt, f_prev, setpoints, beta,
                                 -beta * (mu - mean_setp));
        const double next = mean_of(sol.temps);
        if (std::abs(next - mu) <= kFixedPointTol * std::max(1.0, std::abs(mu))) return sol;
        mu = next;
    }
    throw std::runtime_error("global-data control: fixed point not converged");
}

PipeSolution solve_market_b_unbounded(const BuildingParams& bp,
                                      std::span<const double> temps_prev,
                                      std::span<const double> virt,
                                      std::span<const double> f_prev,
                                      std::span<const double> setpoints, const EqParams& eqp) {
    const double alpha_sq = eqp.alpha * eqp.alpha;
    double price = 0.0;
    PipeSolution sol, prev;
    for (int iter = 0; iter < kMaxFixedPointIters; ++iter) {
        sol = solve_control_pipe(bp, temps_prev, virt, f_prev, setpoints, eqp.beta,
                                 -price / (2.0 * alpha_sq));
        if (iter > 0) {
            double change = 0.0;
            for (std::size_t o = 0; o < sol.temps.size(); ++o)
                change = std::max(change, std::abs(sol.temps[o] - prev.temps[o]));
            if (change <= kFixedPointTol) return sol;
        }
        std::vector<NetDemandFn> fns(sol.temps.size());
        for (std::size_t o = 0; o < fns.size(); ++o) {
            fns[o].phi = eqp.beta * (sol.temps[o] - setpoints[o]);
            fns[o].alpha_sq = alpha_sq;
            fns[o].lower = eqp.f_min - f_prev[o];
            fns[o].upper = eqp.f_max - f_prev[o];
        }
        price = clear_unbounded(fns).price;
        prev = sol;
    }
    throw std::runtime_error("equilibrium market: fixed point not converged");
}

// Bounded mode: the cleared valve changes are exactly zero-sum, so the price
// is the root of the implicit aggregate valve change. That aggregate is
// continuous in the price (every stage of the office solve is), so a
// bracketed bisection always lands; plain re-clearing can cycle once bounds
// pin offices.
PipeSolution solve_market_b_bounded(const BuildingParams& bp,
                                    std::span<const double> temps_prev,
                                    std::span<const double> virt,
                                    std::span<const double> f_prev,
                                    std::span<const double> setpoints, const EqParams& eqp) {
    const double alpha_sq = eqp.alpha * eqp.alpha;
    PipeSolution sol;
    auto net_change = [&](double price) {
        sol = solve_control_pipe(bp, temps_prev, virt, f_prev, setpoints, eqp.beta,
                                 -price / (2.0 * alpha_sq));
        double z = 0.0;
        for (std::size_t o = 0; o < sol.control.size(); ++o) z += sol.control[o] - f_prev[o];
        return z;
    };

    double lo = 0.0, hi = 0.0;
    double z_lo = net_change(lo), z_hi = z_lo;
    double span = 1.0;
    int doublings = 0;
    while ((z_lo < 0.0 || z_hi > 0.0) && doublings < 128) {
        if (z_lo < 0.0) z_lo = net_change(lo -= span);
        if (z_hi > 0.0) z_hi = net_change(hi += span);
        span *= 2.0;
        ++doublings;
    }
    if (z_lo < 0.0 || z_hi > 0.0)
        throw std::runtime_error("equilibrium market: price bracket not found");

    double mid = 0.5 * (lo + hi);
    double z = net_change(mid);
    while (std::abs(z) > eqp.eps) {
        if (z > 0.0)
            lo = mid;
        else
            hi = mid;
        const double next = 0.5 * (lo + hi);
        if (next == mid) break;
        mid = next;
        z = net_change(mid);
    }
    return sol;
}

} // namespace

const char* scheme_name(Scheme s) {
    switch (s) {
    case Scheme::Uncontrolled: return "uncontrolled";
    case Scheme::ControlA: return "control-a";
    case Scheme::ControlB: return "control-b";
    case Scheme::MarketA: return "market-a";
    case Scheme::MarketA_NoMoney: return "market-a-no-money";
    case Scheme::MarketA_NoTemperature: return "market-a-no-temperature";
    case Scheme::MarketA_NoAuction: return "market-a-no-auction";
    case Scheme::MarketB_Unbounded: return "market-b-unbounded";
    case Scheme::MarketB_Bounded: return "market-b-bounded";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
    for (int s = 0; s <= static_cast<int>(Scheme::MarketB_Bounded); ++s) {
        if (name == scheme_name(static_cast<Scheme>(s))) return static_cast<Scheme>(s);
    }
    return std::nullopt;
}

double ScenarioConfig::effective_alpha() const {
    if (alpha) return *alpha;
    switch (scheme) {
    case Scheme::MarketA: return 64.0;
    case Scheme::MarketA_NoMoney: return 66.0;
    case Scheme::MarketA_NoTemperature: return 65.0;
    case Scheme::MarketA_NoAuction: return 17.0;
    default: return 0.0;  // unused outside the HC schemes
    }
}

void ScenarioConfig::validate() const {
    building.validate();
    if (duration_minutes < 1) throw std::invalid_argument("duration: must be at least 1");
    if (start_minute < 0) throw std::invalid_argument("start_minute: must be non-negative");
    if (!(beta > 0.0)) throw std::invalid_argument("beta: must be positive");
    if (!(eps > 0.0)) throw std::invalid_argument("eps: must be positive");
    if (is_hc_scheme(scheme) && !(effective_alpha() > 0.0))
        throw std::invalid_argument("alpha: must be positive");
    auto check_per_office = [&](const std::vector<double>& v, const char* key) {
        if (v.size() != 1 && v.size() != static_cast<std::size_t>(building.n_offices))
            throw std::invalid_argument(std::string(key) + ": need one value or one per office");
    };
    check_per_office(initial_temps, "initial_temperature");
    check_per_office(setpoints, "setpoint");
}

std::vector<double> expand_per_office(const std::vector<double>& values, int n_offices) {
    const auto n = static_cast<std::size_t>(n_offices);
    if (values.size() == n) return values;
    if (values.size() == 1) return std::vector<double>(n, values.front());
    throw std::invalid_argument("per-office vector: need one value or one per office");
}

std::vector<StepMeasure> SimTrace::measures() const {
    std::vector<StepMeasure> out;
    out.reserve(records.size());
    for (const TraceRecord& r : records) out.push_back(r.measure);
    return out;
}

double SimTrace::window_stddev_mean(std::size_t from, std::size_t to) const {
    const auto m = measures();
    return window_mean(m, from, std::min(to, m.size()));
}

OfficeState SimTrace::office_at(std::size_t step, std::size_t office) const {
    if (step >= records.size()) throw std::invalid_argument("step out of range");
    const TraceRecord& rec = records[step];
    if (office >= rec.temps.size()) throw std::invalid_argument("office out of range");
    const auto setp = expand_per_office(config.setpoints, config.building.n_offices);
    return OfficeState{rec.temps[office], rec.control[office], setp[office]};
}

SimTrace run_scenario(const ScenarioConfig& config) {
    config.validate();
    const BuildingParams& bp = config.building;
    const auto n = static_cast<std::size_t>(bp.n_offices);

    SimTrace trace;
    trace.config = config;
    if (is_hc_scheme(config.scheme)) trace.config.alpha = config.effective_alpha();
    trace.version = kVersion;
    trace.records.reserve(static_cast<std::size_t>(config.duration_minutes));

    std::vector<double> temps = expand_per_office(config.initial_temps, bp.n_offices);
    const std::vector<double> setpoints = expand_per_office(config.setpoints, bp.n_offices);
    const double mean_setp = mean_of(setpoints);

    // Valves start closed. The bounded equilibrium market is the exception:
    // its clearing is exactly zero-sum, so it can only redistribute whatever
    // the valves already admit; it starts from the uniform fair share of the
    // head resource instead.
    std::vector<double> control(n, 0.0);
    if (config.scheme == Scheme::MarketB_Bounded) {
        const double share = bp.unlimited() ? 0.5 * (bp.f_min + bp.f_max)
                                            : *bp.resource_input / static_cast<double>(n);
        control.assign(n, std::clamp(share, bp.f_min, bp.f_max));
    }

    SplitMix64 weather_rng(derive_stream(config.seed, kWeatherStreamTag));
    SplitMix64 scheme_rng(derive_stream(
        config.seed, kSchemeStreamTag + static_cast<std::uint64_t>(config.scheme)));

    const ControllerParams ctl{config.beta, bp.f_min, bp.f_max};
    HcParams hcp;
    hcp.alpha = config.effective_alpha();
    hcp.f_max = bp.f_max;
    hcp.variant = hc_variant(config.scheme);
    EqParams eqp;
    eqp.beta = config.beta;
    eqp.alpha = alpha_from_physics(bp.thermal_resistance, bp.thermal_capacitance);
    eqp.bounded = config.scheme == Scheme::MarketB_Bounded;
    eqp.eps = config.eps;
    eqp.f_min = bp.f_min;
    eqp.f_max = bp.f_max;

    for (std::int64_t k = 0; k < config.duration_minutes; ++k) {
        const std::int64_t minute = config.start_minute + k + 1;
        const WeatherSample weather = sample_weather(bp, minute, weather_rng);

        // Controller and equilibrium-market laws act on the interval's own
        // temperature, solved jointly with the thermal update; the auction
        // protocol is sequential by construction and reads the latest
        // computed temperatures instead.
        double price = kNoPrice;
        try {
            switch (config.scheme) {
            case Scheme::Uncontrolled:
                break;
            case Scheme::ControlA: {
                const PipeSolution sol = solve_control_pipe(
                    bp, temps, weather.virtual_temp, control, setpoints, config.beta, 0.0);
                for (std::size_t o = 0; o < n; ++o)
                    control[o] = control_a_update(control[o], sol.temps[o], setpoints[o], ctl);
                break;
            }
            case Scheme::ControlB: {
                const PipeSolution sol = solve_control_b(bp, temps, weather.virtual_temp,
                                                         control, setpoints, config.beta,
                                                         mean_setp);
                const double mean_temp = mean_of(sol.temps);
                for (std::size_t o = 0; o < n; ++o)
                    control[o] = control_b_update(control[o], sol.temps[o], setpoints[o],
                                                  mean_temp, mean_setp, ctl);
                break;
            }
            case Scheme::MarketA:
            case Scheme::MarketA_NoMoney:
            case Scheme::MarketA_NoTemperature: {
                const MarketSnapshot snap{temps, setpoints, control};
                const std::vector<Bid> bids = make_bids(snap, hcp);
                const AuctionOutcome outcome = clear_auction(bids, scheme_rng);
                control = apply_fills(control, outcome.fills, bp.f_min, bp.f_max);
                if (outcome.traded) price = outcome.clearing_price;
                break;
            }
            case Scheme::MarketA_NoAuction: {
                const double mean_temp = mean_of(temps);
                std::vector<double> t(n);
                for (std::size_t o = 0; o < n; ++o)
                    t[o] = compute_t(temps[o], setpoints[o], mean_temp, mean_setp);
                control = no_auction_update(control, t, hcp.alpha, bp.f_min, bp.f_max);
                break;
            }
            case Scheme::MarketB_Unbounded:
            case Scheme::MarketB_Bounded: {
                const PipeSolution sol =
                    eqp.bounded
                        ? solve_market_b_bounded(bp, temps, weather.virtual_temp, control,
                                                 setpoints, eqp)
                        : solve_market_b_unbounded(bp, temps, weather.virtual_temp, control,
                                                   setpoints, eqp);
                const MarketSnapshot snap{sol.temps, setpoints, control};
                ClearingResult clearing;
                control = market_b_step(snap, eqp, &clearing);
                price = clearing.price;
                break;
            }
            }
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("interval " + std::to_string(minute) + ": " + e.what());
        } catch (const std::runtime_error& e) {
            throw std::runtime_error("interval " + std::to_string(minute) + ": " + e.what());
        }

        PowerAllocation alloc = pipeline_allocate(control, bp);
        for (std::size_t o = 0; o < n; ++o) {
            temps[o] = step_temperature(temps[o], weather.virtual_temp[o], alloc.consumed[o],
                                        bp.thermal_resistance, bp.thermal_capacitance);
            alloc.heat_in[o] = (weather.virtual_temp[o] - temps[o]) / bp.thermal_resistance;
        }

        TraceRecord rec;
        rec.step = k;
        rec.minute = minute;
        rec.temps = temps;
        rec.control = control;
        rec.consumed = std::move(alloc.consumed);
        rec.virtual_temp = weather.virtual_temp;
        rec.heat_in = std::move(alloc.heat_in);
        rec.price = price;
        rec.measure = stddev_deviation(temps, setpoints);
        rec.measure.interval = minute;
        trace.records.push_back(std::move(rec));
    }
    return trace;
}

std::vector<SimTrace> run_comparison(std::span<const ScenarioConfig> configs) {
    if (configs.empty()) throw std::invalid_argument("comparison: need at least one scenario");
    const ScenarioConfig& first = configs.front();
    for (const ScenarioConfig& c : configs) {
        if (!(c.building == first.building))
            throw std::invalid_argument("comparison: mismatched buildings");
        if (c.seed != first.seed || c.start_minute != first.start_minute ||
            c.duration_minutes != first.duration_minutes ||
            c.initial_temps != first.initial_temps || c.setpoints != first.setpoints)
            throw std::invalid_argument("comparison: scenarios may differ only in scheme parameters");
    }
    std::vector<SimTrace> traces;
    traces.reserve(configs.size());
    for (const ScenarioConfig& c : configs) traces.push_back(run_scenario(c));
    return traces;
}

} // namespace coolsim

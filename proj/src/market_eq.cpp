#include "coolsim/market_eq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coolsim {

namespace {

double aggregate_demand(std::span<const NetDemandFn> fns, double price) {
    double z = 0.0;
    for (const NetDemandFn& fn : fns) z += demand_at(fn, price);
    return z;
}

} // namespace

double demand_at(const NetDemandFn& fn, double price) {
    return std::clamp(fn.phi - price / (2.0 * fn.alpha_sq), fn.lower, fn.upper);
}

ClearingResult clear_unbounded(std::span<const NetDemandFn> fns) {
    if (fns.empty()) throw std::invalid_argument("no agents");
    const auto n = static_cast<double>(fns.size());
    double phi_sum = 0.0, inv_sum = 0.0;
    for (const NetDemandFn& fn : fns) {
        phi_sum += fn.phi;
        inv_sum += 1.0 / fn.alpha_sq;
    }
    const double mean_phi = phi_sum / n;
    const double mean_inv = inv_sum / n;

    ClearingResult result;
    result.price = phi_sum / (inv_sum / 2.0);
    result.deltas.resize(fns.size());
    double sum = 0.0;
    for (std::size_t o = 0; o < fns.size(); ++o) {
        result.deltas[o] = fns[o].phi - mean_phi / (fns[o].alpha_sq * mean_inv);
        sum += result.deltas[o];
    }
    result.residual = std::abs(sum);
    return result;
}

ClearingResult clear_bounded(std::span<const NetDemandFn> fns, double eps) {
    if (fns.empty()) throw std::invalid_argument("no agents");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");

    double lower_sum = 0.0, upper_sum = 0.0;
    for (const NetDemandFn& fn : fns) {
        if (fn.lower > fn.upper) throw std::runtime_error("no feasible reallocation");
        lower_sum += fn.lower;
        upper_sum += fn.upper;
    }
    if (lower_sum > 0.0 || upper_sum < 0.0)
        throw std::runtime_error("no feasible reallocation");

    // Price extremes that saturate every office: above p_hi all demands sit
    // at their lower bound, below p_lo at their upper bound.
    double p_lo = fns.front().phi, p_hi = fns.front().phi;
    for (const NetDemandFn& fn : fns) {
        p_lo = std::min(p_lo, 2.0 * fn.alpha_sq * (fn.phi - fn.upper));
        p_hi = std::max(p_hi, 2.0 * fn.alpha_sq * (fn.phi - fn.lower));
    }

    double z_lo = aggregate_demand(fns, p_lo);
    double z_hi = aggregate_demand(fns, p_hi);
    int doublings = 0;
    double span = std::max(1.0, p_hi - p_lo);
    while ((z_lo < 0.0 || z_hi > 0.0) && doublings < 64) {
        if (z_lo < 0.0) p_lo -= span;
        if (z_hi > 0.0) p_hi += span;
        span *= 2.0;
        z_lo = aggregate_demand(fns, p_lo);
        z_hi = aggregate_demand(fns, p_hi);
        ++doublings;
    }
    if (z_lo < 0.0 || z_hi > 0.0) throw std::runtime_error("bracket not found");

    ClearingResult result;
    double mid = 0.5 * (p_lo + p_hi);
    double z_mid = aggregate_demand(fns, mid);
    while (std::abs(z_mid) > eps) {
        if (z_mid > 0.0)
            p_lo = mid;
        else
            p_hi = mid;
        const double next = 0.5 * (p_lo + p_hi);
        if (next == mid) break;  // interval exhausted at double precision
        mid = next;
        z_mid = aggregate_demand(fns, mid);
        ++result.iterations;
    }

    result.price = mid;
    result.deltas.resize(fns.size());
    for (std::size_t o = 0; o < fns.size(); ++o) result.deltas[o] = demand_at(fns[o], mid);
    result.residual = std::abs(z_mid);
    return result;
}

double alpha_from_physics(double r, double c) {
    return (1.0 / c) / (1.0 + 1.0 / (r * c));
}

std::vector<double> money_transfers(const ClearingResult& result) {
    std::vector<double> paid(result.deltas.size());
    for (std::size_t o = 0; o < paid.size(); ++o) paid[o] = result.price * result.deltas[o];
    return paid;
}

std::vector<double> market_b_step(const MarketSnapshot& snapshot, const EqParams& params,
                                  ClearingResult* clearing) {
    std::vector<NetDemandFn> fns(snapshot.temps.size());
    for (std::size_t o = 0; o < fns.size(); ++o) {
        fns[o].phi = params.beta * (snapshot.temps[o] - snapshot.setpoints[o]);
        fns[o].alpha_sq = params.alpha * params.alpha;
        fns[o].lower = params.f_min - snapshot.control[o];
        fns[o].upper = params.f_max - snapshot.control[o];
    }

    ClearingResult result =
        params.bounded ? clear_bounded(fns, params.eps) : clear_unbounded(fns);

    std::vector<double> f(snapshot.control.begin(), snapshot.control.end());
    for (std::size_t o = 0; o < f.size(); ++o) {
        f[o] += result.deltas[o];
        if (!params.bounded) f[o] = std::clamp(f[o], params.f_min, params.f_max);
    }
    if (clearing) *clearing = std::move(result);
    return f;
}

} // namespace coolsim

#pragma once

#include <span>
#include <vector>

#include "coolsim/market_hc.hpp"  // MarketSnapshot

namespace coolsim {

/// One office's clamped linear net demand for a change in cooling power.
/// phi is the change an independent controller would have made on its own;
/// alpha_sq weights how much the office cares about missing it; lower/upper
/// are the bounds the valve limits impose on the change.
struct NetDemandFn {
    double phi = 0.0;
    double alpha_sq = 1.0;
    double lower = 0.0;
    double upper = 0.0;
};

struct ClearingResult {
    double price = 0.0;
    std::vector<double> deltas;
    double residual = 0.0;  // |sum of deltas| actually achieved
    int iterations = 0;     // bisection steps (0 for the closed form)
};

struct EqParams {
    double beta = 10.0;
    double alpha = 1.0;  // strength parameter, magnitude of dT/dP per interval
    bool bounded = false;
    double eps = 1e-9;
    double f_min = 0.0;
    double f_max = 3.0;
};

/// Net demand at a price: phi - p/(2 alpha^2), clamped to [lower, upper].
/// Non-increasing in p.
double demand_at(const NetDemandFn& fn, double price);

/// Closed-form clearing ignoring bounds: p = sum(phi) / sum(1/(2 alpha^2)),
/// deltas phi_o - <phi> / (alpha_o^2 <1/alpha^2>). Deltas sum to zero.
ClearingResult clear_unbounded(std::span<const NetDemandFn> fns);

/// Bisection on the aggregate demand, which is continuous, piecewise linear
/// and non-increasing, until |sum of demands| <= eps. Throws
/// std::runtime_error("no feasible reallocation") when the bounds admit no
/// zero-sum change, and "bracket not found" if a sign-changing bracket cannot
/// be established.
ClearingResult clear_bounded(std::span<const NetDemandFn> fns, double eps);

/// Strength parameter from the thermal model: the magnitude of the one-step
/// temperature response to consumed power, (1/C) / (1 + 1/(R C)). The
/// response is negative for cooling; only the square is ever used.
double alpha_from_physics(double r, double c);

/// Money each office pays for its cleared change (negative = receives).
/// Diagnostic only; it never feeds back into the next round.
std::vector<double> money_transfers(const ClearingResult& result);

/// One market round: builds each office's demand function with
/// phi = beta (T - setpoint), clears (closed form or bounded per params),
/// and returns the updated control vector. The unbounded mode clamps the
/// result to the valve bounds afterwards; the bounded mode never leaves them.
std::vector<double> market_b_step(const MarketSnapshot& snapshot, const EqParams& params,
                                  ClearingResult* clearing = nullptr);

} // namespace coolsim

#pragma once

namespace coolsim {

struct ControllerParams {
    double gain = 10.0;  // beta
    double f_min = 0.0;
    double f_max = 3.0;
};

/// Independent integral controller: integrates the office's own deviation
/// from its setpoint, clamped to the valve bounds.
double control_a_update(double f_prev, double temp, double setpoint,
                        const ControllerParams& params);

/// Integral controller with global data: integrates the office deviation
/// relative to the building-average deviation. The correction terms sum to
/// zero across offices before clamping.
double control_b_update(double f_prev, double temp, double setpoint, double mean_temp,
                        double mean_setpoint, const ControllerParams& params);

} // namespace coolsim

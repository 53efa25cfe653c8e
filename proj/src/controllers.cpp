#include "coolsim/controllers.hpp"

#include <algorithm>

namespace coolsim {

double control_a_update(double f_prev, double temp, double setpoint,
                        const ControllerParams& params) {
    const double raw = f_prev + params.gain * (temp - setpoint);
    return std::clamp(raw, params.f_min, params.f_max);
}

double control_b_update(double f_prev, double temp, double setpoint, double mean_temp,
                        double mean_setpoint, const ControllerParams& params) {
    const double raw =
        f_prev + params.gain * ((temp - setpoint) - (mean_temp - mean_setpoint));
    return std::clamp(raw, params.f_min, params.f_max);
}

} // namespace coolsim

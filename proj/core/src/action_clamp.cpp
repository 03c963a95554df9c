#include "cradle/action_clamp.hpp"

#include <algorithm>
#include <stdexcept>

namespace cradle {

bool clamp_schedule_valid(const ClampSchedule& sched) {
  return sched.episode_length >= 2 && sched.ramp_fraction > 0.0 && sched.ramp_fraction <= 1.0;
}

double clamp_coefficient(int step, const ClampSchedule& sched) {
  if (!clamp_schedule_valid(sched)) throw std::invalid_argument("invalid clamp schedule");
  if (step < 0 || step > sched.episode_length) {
    throw std::out_of_range("clamp_coefficient: step outside [0, episode_length]");
  }
  if (!sched.enabled) return 1.0;
  return std::min(1.0, static_cast<double>(step) / (sched.ramp_fraction * sched.episode_length));
}

Eigen::VectorXd apply_clamp(const Eigen::VectorXd& action, double coeff,
                            const Eigen::VectorXd& stall_torques) {
  if (action.size() != stall_torques.size()) {
    throw std::invalid_argument("apply_clamp: action/stall torque length mismatch");
  }
  return coeff * stall_torques.cwiseProduct(action.cwiseMax(-1.0).cwiseMin(1.0));
}

}  // namespace cradle

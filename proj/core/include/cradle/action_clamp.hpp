#pragma once

#include <Eigen/Core>

namespace cradle {

// Within-episode torque ramp: the action-to-torque gain grows linearly from
// 0 to 1 over the first `ramp_fraction` of the episode and stays at 1 after,
// so full stall torque is only available from mid-episode on.
struct ClampSchedule {
  int episode_length = 600;    // steps, >= 2
  double ramp_fraction = 0.5;  // in (0, 1]
  bool enabled = true;         // false: coefficient identically 1 (ablation)
};

bool clamp_schedule_valid(const ClampSchedule& sched);

// Coefficient in [0,1] for 0 <= step <= episode_length; exactly 0 at step 0
// and exactly 1 at and after ramp_fraction * episode_length.
// Throws std::out_of_range for steps outside the episode.
double clamp_coefficient(int step, const ClampSchedule& sched);

// torque_k = coeff * stall_torque_k * clip(action_k, -1, 1).
// Throws std::invalid_argument on length mismatch.
Eigen::VectorXd apply_clamp(const Eigen::VectorXd& action, double coeff,
                            const Eigen::VectorXd& stall_torques);

}  // namespace cradle

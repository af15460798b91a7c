#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "comgrasp/kinematics.hpp"

namespace comgrasp {

enum class GraspPhase { before_grasp, after_grasp };

/// Per-joint axial torque vector at a fixed joint configuration.
///
/// Sign convention: tau stores the actuator holding torque, i.e. the torque
/// that balances gravity, so an ideal before-grasp snapshot satisfies
/// tau + self_gravity_torques == 0.
struct TorqueSnapshot {
  Eigen::VectorXd tau;  ///< N*m
  GraspPhase phase = GraspPhase::before_grasp;
  ArmState state;
};

/// Ground truth used to synthesize after-grasp torques.
struct PayloadTruth {
  /// eelink origin -> object CoM, world-aligned axes, m.
  Eigen::Vector3d delta_r = Eigen::Vector3d::Zero();
  /// Object weight magnitude G_o, N; the force acts along world -z.
  double weight = 0.0;
};

/// Additive zero-mean Gaussian per joint, independent draws per joint,
/// reproducible from the seed.
struct NoiseSpec {
  double sigma = 0.0;  ///< N*m
  std::uint64_t seed = 0;
};

/// tau = -self_gravity_torques(chain, state) + noise.
TorqueSnapshot capture_before(const KinematicChain& chain, const ArmState& state,
                              const NoiseSpec& noise = {});

/// tau_i = tau_before_ideal_i - axis_i . ((r_i_ee + delta_r) x (0,0,-G_o))
///         + noise_i,
/// so the axis-projected moment balance holds exactly at zero noise.
/// Equal seeds give draws identical to capture_before's.
TorqueSnapshot capture_after(const KinematicChain& chain, const ArmState& state,
                             const PayloadTruth& truth,
                             const NoiseSpec& noise = {});

}  // namespace comgrasp

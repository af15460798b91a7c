#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "comgrasp/scene.hpp"
#include "comgrasp/sensing.hpp"

namespace comgrasp {

/// Estimated payload: CoM offset from the eelink origin (world-aligned
/// eelink axes, x/y components only) plus weight, with the final objective
/// value and iteration count of the solve.
struct ComEstimate {
  Eigen::Vector2d delta_r_xy = Eigen::Vector2d::Zero();  ///< m
  double weight = 0.0;                                   ///< G_o, N
  double residual = 0.0;  ///< final objective, (N*m)^2
  int iterations = 0;
};

/// Gradient-descent settings. learning_rate is the initial step scale; the
/// step is halved whenever a trial step increases the objective and grown
/// again after accepted steps. Convergence is declared when an accepted
/// step decreases the objective by less than convergence_tol.
struct SolverConfig {
  double learning_rate = 1e-2;
  int max_iterations = 10000;
  double convergence_tol = 1e-14;
  /// Optional explicit start (dr_x, dr_y, G_o). Default: dr = 0 and
  /// G_o = |dtau| / |mean lever arm|.
  std::optional<Eigen::Vector3d> init;
};

/// CoM coordinate along the rod axis in the object frame. x is clamped to
/// [-l/2, l/2]; out_of_range records whether clamping occurred and
/// x_unclamped keeps the raw value.
struct ObjectFrameCom {
  double x = 0.0;
  bool out_of_range = false;
  double x_unclamped = 0.0;
};

/// Axis-projected moment-balance objective
///   sum_i ( axis_i . ((r_i_ee + dr) x (0,0,-G_o)) + tau_after_i - tau_before_i )^2
/// evaluated at candidate = (dr_x, dr_y, G_o); dr_z plays no role.
/// Throws InvalidInputError when the snapshot pair does not share one arm
/// state or the sizes disagree.
double residual(const TorqueSnapshot& before, const TorqueSnapshot& after,
                const std::vector<LeverArm>& arms,
                const Eigen::Vector3d& candidate);

/// Analytic gradient of residual() with respect to (dr_x, dr_y, G_o).
Eigen::Vector3d residual_gradient(const TorqueSnapshot& before,
                                  const TorqueSnapshot& after,
                                  const std::vector<LeverArm>& arms,
                                  const Eigen::Vector3d& candidate);

/// Gradient descent on the bilinear objective, the estimation method under
/// test. Observability is pre-checked through the rank of the linear design
/// matrix (see solve_ls_oracle); rank < 3 raises UnobservableError. Ten
/// consecutive trial steps that increase the objective raise
/// DivergenceError. A non-positive final weight raises
/// NonphysicalWeightError.
ComEstimate solve_gd(const TorqueSnapshot& before, const TorqueSnapshot& after,
                     const std::vector<LeverArm>& arms,
                     const SolverConfig& config = {});

/// Independent verification oracle. With gravity along -z the balance is
/// linear in (u, v, w) = (G_o*dr_x, G_o*dr_y, G_o); the normal equations
/// give the global minimizer and the design rank detects unobservability.
/// w <= 0 raises NonphysicalWeightError.
ComEstimate solve_ls_oracle(const TorqueSnapshot& before,
                            const TorqueSnapshot& after,
                            const std::vector<LeverArm>& arms);

/// Rank of the n x 3 linear design built from the lever arms (singular
/// values above 1e-10 of the largest). Shared by both solver routes.
int design_rank(const std::vector<LeverArm>& arms);

/// Planar closed-form projection of the estimate into the object frame:
///   x = ((r11 r33 - r13 r31)/r33) dr_x + ((r12 r33 - r13 r32)/r33) dr_y
///       + p_x - (r13/r33) p_z,
/// the z=0 elimination of the full transform. |r33| <= 1e-6 raises
/// SingularPoseError. The result is clamped to [-l/2, l/2] with a flag so a
/// regrasp stays actionable when noise pushes the estimate past a rod end.
ObjectFrameCom project_to_object(const ComEstimate& estimate,
                                 const ObjectTransform& m, double rod_length);

/// Regrasp at the estimated CoM: the center grasp translated by x_com along
/// the rod axis (recovered from the grasp yaw), same yaw, z and grip force.
GraspPose plan_regrasp(const GraspPose& center_grasp,
                       const ObjectFrameCom& x_com);

}  // namespace comgrasp

#pragma once

#include <Eigen/Dense>

#include <vector>

#include "comgrasp/geometry.hpp"

namespace comgrasp {

/// One revolute joint plus the link rigidly attached to its output frame.
///
/// The joint frame at angle q is
///   parent_frame * parent_transform * Rot(axis, q),
/// i.e. parent_transform places the joint relative to the previous joint at
/// q = 0 and the rotation happens about `axis` in the joint's local frame.
struct JointSpec {
  RigidTransform parent_transform = RigidTransform::Identity();
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();  ///< unit, local frame
  double link_mass = 0.0;                           ///< kg
  Eigen::Vector3d link_com = Eigen::Vector3d::Zero();  ///< m, local frame
};

/// Serial chain of revolute joints, base first. Immutable after construction.
class KinematicChain {
 public:
  /// Validates axes (unit within 1e-9), masses (>= 0) and all stored
  /// rotations. Prismatic joints are not modeled.
  KinematicChain(std::vector<JointSpec> joints, RigidTransform eelink_offset);

  std::size_t size() const { return joints_.size(); }
  const JointSpec& joint(std::size_t i) const { return joints_[i]; }
  const std::vector<JointSpec>& joints() const { return joints_; }
  const RigidTransform& eelink_offset() const { return eelink_offset_; }

 private:
  std::vector<JointSpec> joints_;
  RigidTransform eelink_offset_;
};

/// Joint configuration, radians, base joint first.
struct ArmState {
  Eigen::VectorXd q;
};

/// World-frame pose of every joint and of the eelink.
struct FrameSet {
  std::vector<RigidTransform> joint_frames;  ///< world <- joint i
  RigidTransform eelink_frame;               ///< world <- eelink
};

/// Per-joint world-frame axis and lever arm to the eelink origin.
struct LeverArm {
  Eigen::Vector3d axis;  ///< joint rotation axis, world frame, unit
  Eigen::Vector3d r_ee;  ///< joint origin -> eelink origin, world frame, m
};

inline const Eigen::Vector3d kDefaultGravity{0.0, 0.0, -9.81};

/// Composes parent transforms and joint rotations base -> tip.
/// Throws InvalidInputError on a joint-count mismatch or when a composed
/// rotation drifts from SO(3) by more than 1e-6.
FrameSet forward_kinematics(const KinematicChain& chain, const ArmState& state);

/// axis_i = world rotation of joint i applied to its local axis;
/// r_i_ee = eelink origin - joint i origin, world frame.
std::vector<LeverArm> lever_arms(const KinematicChain& chain,
                                 const ArmState& state);

/// Axial torque of gravity acting on each joint's distal subchain:
///   tau_i = sum_{j >= i} axis_i . ((p_com_j - p_joint_i) x m_j * g).
/// Equals -dU/dq for the chain's gravitational potential U. The
/// before-grasp holding torque is the negative of this vector.
Eigen::VectorXd self_gravity_torques(const KinematicChain& chain,
                                     const ArmState& state,
                                     const Eigen::Vector3d& gravity = kDefaultGravity);

}  // namespace comgrasp

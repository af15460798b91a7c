#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "comgrasp/geometry.hpp"

namespace comgrasp {

/// Ground-truth rod. The object frame has its origin at the geometric center
/// and x along the rod axis; com_offset is the true CoM coordinate on that
/// axis.
struct RodObject {
  std::string id;
  double length = 0.0;      ///< l, m
  double radius = 0.0;      ///< d, cross-section radius, m
  double mass = 0.0;        ///< kg
  double com_offset = 0.0;  ///< m, in [-l/2, l/2]
  RigidTransform world_pose = RigidTransform::Identity();

  /// Enforces 0 < d <= l/4, mass > 0, |com_offset| <= l/2.
  void validate() const;

  Eigen::Vector3d axis_world() const { return world_pose.linear().col(0); }
  Eigen::Vector3d center_world() const { return world_pose.translation(); }
};

/// Planar grasp in world frame. z is the gripper closing height (the rod
/// axis height for a resting rod); yaw is normalized to (-pi, pi].
struct GraspPose {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double yaw = 0.0;
  double grip_force = 0.0;  ///< N, > 0
};

enum class CameraKind { top_down, side };

/// Orthographic camera. Pixel (col, row) maps to camera-frame meters
///   x_c = (col + 0.5 - width/2) * scale,
///   y_c = (row + 0.5 - height/2) * scale,
/// and pose maps camera coordinates to world. A top_down camera must look
/// along gravity, a side camera perpendicular to it (1e-6 rad each).
struct CameraModel {
  RigidTransform pose = RigidTransform::Identity();  ///< world <- camera
  CameraKind kind = CameraKind::top_down;
  int width = 0;
  int height = 0;
  double scale = 0.0;  ///< m / pixel

  void validate() const;
};

/// Rigid transform M from the eelink frame to the object frame, used by the
/// planar CoM projection. The r_33 entry is guarded where M is consumed.
class ObjectTransform {
 public:
  explicit ObjectTransform(const RigidTransform& m);

  double r(int i, int j) const { return m_.linear()(i, j); }
  Eigen::Vector3d p() const { return m_.translation(); }
  const RigidTransform& transform() const { return m_; }

 private:
  RigidTransform m_;
};

/// Uniform grasp along the central 90% of the rod axis, yaw perpendicular to
/// the rod direction, z at the rod axis height. Pure function of
/// (rod, seed, grip_force); requires the rod to lie flat (axis horizontal).
GraspPose sample_random_grasp(const RodObject& rod, std::uint64_t seed,
                              double grip_force);

/// The canonical six-rod benchmark set, thinnest first. The paper the
/// benchmark follows does not publish object dimensions, so these values are
/// fixed by this repository (and mirrored in scenes/default.scene).
std::vector<RodObject> paper_objects();

}  // namespace comgrasp

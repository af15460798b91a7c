#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <span>
#include <vector>

#include "comgrasp/scene.hpp"

namespace comgrasp {

/// Boolean occupancy grid produced by the orthographic renderer, row-major.
struct OccupancyMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> grid;  ///< 1 occupied, 0 free
  double scale = 0.0;              ///< m / pixel
  CameraModel camera;

  bool at(int col, int row) const {
    return grid[static_cast<std::size_t>(row) * width + col] != 0;
  }
  /// Pixel center in camera-frame meters.
  Eigen::Vector2d pixel_center(int col, int row) const {
    return {(col + 0.5 - width / 2.0) * scale,
            (row + 0.5 - height / 2.0) * scale};
  }
};

/// Minimal-area oriented rectangle of the occupied pixel centers,
/// camera-frame meters. u and v are perpendicular unit vectors; a >= b and
/// u spans the long side, canonicalized to direction angle in (-pi/2, pi/2].
struct MinAreaRect {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  Eigen::Vector2d u = Eigen::Vector2d::UnitX();
  Eigen::Vector2d v = Eigen::Vector2d::UnitY();
  double a = 0.0;  ///< half extent along u, m
  double b = 0.0;  ///< half extent along v, m
};

/// Side-camera reading during a lift.
struct SlipObservation {
  double tilt_angle = 0.0;      ///< rad, rod axis vs image horizontal
  double contact_offset = 0.0;  ///< m, gripper line along the rod axis from the rect center
  bool slipped = false;
};

/// Slip decision thresholds used by observe_side.
struct SlipThresholds {
  double theta_slip = deg_to_rad(10.0);
  double translation = 0.005;  ///< m
};

/// World state seen by the side camera while the gripper holds the rod.
struct SideViewScene {
  RodObject rod;                 ///< world_pose = pose during the lift
  Eigen::Vector3d grip_point;    ///< eelink origin / jaw centerline, world
  double gripper_halfwidth = 0.018;  ///< m, occluding finger band half width
};

/// Pixel occupied iff its orthographic ray intersects a rod capsule.
/// Throws EmptyMaskError when nothing lands inside the frustum.
OccupancyMask render_mask(std::span<const RodObject> objects,
                          const CameraModel& camera);

/// Convex hull + hull-edge caliper scan over the occupied pixel centers.
/// Handles single-pixel and collinear masks as degenerate (zero-extent)
/// rectangles; throws InvalidInputError on an empty mask.
MinAreaRect min_area_rect(const OccupancyMask& mask);

/// Grasp at the rectangle center, yaw perpendicular to the long side,
/// z at table_z + observed rod radius (the rod axis height). Throws
/// AmbiguousOrientationError when the rectangle is square within 5%.
GraspPose grasp_from_topdown(const OccupancyMask& mask, double table_z,
                             double grip_force);

/// Renders the side view (rod minus the occluding gripper band), fits the
/// rectangle and reads the tilt angle and the signed contact offset of the
/// gripper line along the major axis. slipped is set when either of the
/// thresholds is exceeded relative to initial_contact_offset. Throws
/// ObservationUnavailableError when more than 80% of the rod is occluded.
SlipObservation observe_side(const SideViewScene& scene,
                             const CameraModel& side_camera,
                             double initial_contact_offset,
                             const SlipThresholds& thresholds = {});

/// Transform from the world-aligned eelink frame (origin at the gripper
/// contact) to the object frame: rotation built from the observed tilt and
/// the rod heading, translation placing the object origin contact_offset
/// down the axis. Throws SingularPoseError when |r_33| < 1e-6 (rod nearly
/// vertical). eelink_frame only validates; the transform is relative.
ObjectTransform eelink_to_object(const SlipObservation& observation,
                                 const RigidTransform& eelink_frame,
                                 const Eigen::Vector3d& rod_heading_world);

}  // namespace comgrasp

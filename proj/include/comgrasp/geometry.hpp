#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <cmath>

#include "comgrasp/errors.hpp"

namespace comgrasp {

inline constexpr double kPi = 3.14159265358979323846;

/// Rigid transform (rotation matrix + translation), world <- local unless
/// stated otherwise.
using RigidTransform = Eigen::Isometry3d;

/// Cross-product matrix: skew(v) * u == v.cross(u).
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> skew(const Eigen::Matrix<Scalar, 3, 1>& v) {
  Eigen::Matrix<Scalar, 3, 3> s;
  s << Scalar(0), -v.z(), v.y(),
       v.z(), Scalar(0), -v.x(),
       -v.y(), v.x(), Scalar(0);
  return s;
}

/// Rotation about a unit axis.
template <typename Scalar>
Eigen::Matrix<Scalar, 3, 3> axis_rotation(const Eigen::Matrix<Scalar, 3, 1>& unit_axis,
                                          Scalar angle) {
  return Eigen::AngleAxis<Scalar>(angle, unit_axis).toRotationMatrix();
}

/// Worst deviation of r from a proper rotation: max |r^T r - I| entry or
/// |det(r) - 1|, whichever is larger.
inline double orthonormality_drift(const Eigen::Matrix3d& r) {
  const Eigen::Matrix3d e = r.transpose() * r - Eigen::Matrix3d::Identity();
  return std::max(e.cwiseAbs().maxCoeff(), std::abs(r.determinant() - 1.0));
}

/// Throws InvalidInputError when r has drifted from SO(3). Drift is never
/// repaired silently.
inline void require_rotation(const Eigen::Matrix3d& r, double tol = 1e-6,
                             const char* what = "rotation") {
  const double drift = orthonormality_drift(r);
  if (!(drift <= tol)) {
    throw InvalidInputError(std::string(what) + " is not orthonormal (drift " +
                            std::to_string(drift) + ")");
  }
}

inline RigidTransform make_transform(const Eigen::Matrix3d& rotation,
                                     const Eigen::Vector3d& translation) {
  RigidTransform t = RigidTransform::Identity();
  t.linear() = rotation;
  t.translation() = translation;
  return t;
}

/// Z-Y-X convention: R = Rz(yaw) * Ry(pitch) * Rx(roll).
inline Eigen::Matrix3d rotation_rpy(double roll, double pitch, double yaw) {
  return (Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()) *
          Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX()))
      .toRotationMatrix();
}

inline RigidTransform transform_rpy(const Eigen::Vector3d& xyz, double roll,
                                    double pitch, double yaw) {
  return make_transform(rotation_rpy(roll, pitch, yaw), xyz);
}

/// Wraps to (-pi, pi].
inline double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

/// Wraps a direction angle to (-pi/2, pi/2] (lines are invariant under pi).
inline double wrap_half(double a) {
  double r = std::remainder(a, kPi);
  if (r <= -kPi / 2.0) r += kPi;
  return r;
}

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace comgrasp

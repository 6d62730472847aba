#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace proxsafe {

inline Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d m;
  m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return m;
}

/// Unit quaternion for a rotation vector (axis * angle).
inline Eigen::Quaterniond quat_exp(const Eigen::Vector3d& rot) {
  const double angle = rot.norm();
  if (angle < 1e-12) {
    Eigen::Quaterniond q(1.0, 0.5 * rot.x(), 0.5 * rot.y(), 0.5 * rot.z());
    q.normalize();
    return q;
  }
  return Eigen::Quaterniond(Eigen::AngleAxisd(angle, rot / angle));
}

}  // namespace proxsafe

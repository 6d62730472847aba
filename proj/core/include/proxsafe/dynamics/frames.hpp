#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <optional>

namespace proxsafe::dynamics {

/// Plain face-normal/offset description of a convex polytope in its body
/// frame, {x : normals x <= offsets} with the origin strictly interior.
/// Consumed by the collision module; kept here so scene state needs no
/// geometry dependency.
struct PolytopeSpec {
  Eigen::MatrixX3d normals;
  Eigen::VectorXd offsets;
};

/// Axis-aligned box spec with the given half extents.
PolytopeSpec box_spec(const Eigen::Vector3d& half_extents);

/// Tumbling target body. `attitude` is the orientation of the target frame:
/// rotating a target-frame vector by `attitude` expresses it in the inertial
/// frame. `omega` is the body rate expressed in the target frame; the default
/// tumble holds it constant (principal-axis spin).
struct RsoState {
  Eigen::Quaterniond attitude = Eigen::Quaterniond::Identity();
  Eigen::Vector3d omega = Eigen::Vector3d::Zero();  // rad/s, body frame
  Eigen::Vector3d ellipsoid = Eigen::Vector3d(2.0, 0.5, 0.5);  // semi-axes, m
  std::optional<PolytopeSpec> hull;  // defaults to the circumscribing box

  /// Inertial -> body direction cosine matrix.
  Eigen::Matrix3d dcm_inertial_to_body() const {
    return attitude.toRotationMatrix().transpose();
  }
  Eigen::Matrix3d dcm_body_to_inertial() const { return attitude.toRotationMatrix(); }
};

/// Attitude advanced by dt under the constant body rate.
RsoState advance(const RsoState& rso, double dt);

/// Body attitude extrapolated to a time offset (constant body rate).
Eigen::Matrix3d dcm_body_to_inertial_at(const RsoState& rso, double time_offset);

/// Frame transforms with the rotating-frame transport term on velocities.
struct FrameVec {
  Eigen::Vector3d pos;
  Eigen::Vector3d vel;
};

FrameVec to_rso_frame(const FrameVec& inertial, const RsoState& rso);
FrameVec from_rso_frame(const FrameVec& body, const RsoState& rso);

}  // namespace proxsafe::dynamics

#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <vector>

namespace proxsafe::dynamics {

/// Coupled translational/rotational state of one agent relative to the
/// carrier frame. `q` rotates agent-body vectors into the carrier frame and
/// `omega` is the agent's angular velocity expressed in the carrier frame.
struct RigidBodyState {
  Eigen::Vector3d rho = Eigen::Vector3d::Zero();      // relative position, m
  Eigen::Vector3d rho_dot = Eigen::Vector3d::Zero();  // m/s
  Eigen::Quaterniond q = Eigen::Quaterniond::Identity();
  Eigen::Vector3d omega = Eigen::Vector3d::Zero();    // rad/s
};

/// Mass properties and sensor mount geometry. Construct through `make` so a
/// singular or asymmetric inertia is rejected up front.
struct InertiaModel {
  Eigen::Matrix3d carrier_inertia = Eigen::Matrix3d::Identity();  // kg m^2
  Eigen::Matrix3d agent_inertia = Eigen::Matrix3d::Identity();    // kg m^2
  double mass = 1.0;                                              // kg
  std::vector<Eigen::Vector3d> anchor_points;  // carrier-frame mount positions, m
  Eigen::Vector3d tag_point = Eigen::Vector3d::Zero();  // agent-frame mount, m

  static InertiaModel make(const Eigen::Matrix3d& carrier,
                           const Eigen::Matrix3d& agent, double mass,
                           std::vector<Eigen::Vector3d> anchors = {},
                           const Eigen::Vector3d& tag = Eigen::Vector3d::Zero());
};

enum class AttitudeModel {
  as_printed,      // rate derivative formed in the carrier frame
  standard_euler,  // body-frame Euler equation, mapped back to the carrier frame
};

/// One RK4 step of the coupled relative motion: the tag position follows the
/// rotating mount lever arm, the rates follow the rigid-body Euler equation,
/// and the attitude quaternion is renormalized afterwards. `base_accel` is
/// the translational acceleration of the agent's center of mass and `torque`
/// the external body torque.
RigidBodyState propagate_coupled(const RigidBodyState& s, const InertiaModel& inertia,
                                 const Eigen::Vector3d& torque,
                                 const Eigen::Vector3d& base_accel, double dt,
                                 AttitudeModel model = AttitudeModel::as_printed);

}  // namespace proxsafe::dynamics

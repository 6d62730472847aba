#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>
#include <vector>

namespace proxsafe::estimation {

/// Anchor geometry and noise levels for the range/gyro sensor suite.
struct SensorConfig {
  std::vector<Eigen::Vector3d> anchors;  // carrier-frame anchor positions, m
  Eigen::Vector3d tag_offset = Eigen::Vector3d::Zero();  // agent-frame mount, m
  double range_sigma = 0.05;           // m
  double gyro_sigma = 0.005;           // rad/s
  double accel_noise_density = 1e-4;   // m/s^2/sqrt(Hz) white acceleration
  double gate_sigmas = 5.0;            // innovation gate

  void validate() const;
};

struct RangeMeasurement {
  int anchor_id = 0;
  double range = 0.0;  // m, >= 0
};

/// Tandem filter state: a 6-state translational EKF and a 3-parameter
/// multiplicative attitude filter sharing the gyro signal. The attitude
/// error uses the 2x Gibbs-vector small-angle convention
///   delta_q = (1, a/2) / sqrt(1 + ||a/2||^2),  q = delta_q x q_ref,
/// and is reset to zero whenever it is folded into the reference quaternion.
struct MekfState {
  Eigen::Matrix<double, 6, 1> trans_mean = Eigen::Matrix<double, 6, 1>::Zero();
  Eigen::Matrix<double, 6, 6> trans_cov = Eigen::Matrix<double, 6, 6>::Identity();
  Eigen::Quaterniond ref_quat = Eigen::Quaterniond::Identity();
  Eigen::Vector3d att_err = Eigen::Vector3d::Zero();
  Eigen::Matrix3d att_cov = Eigen::Matrix3d::Identity() * 1e-4;
};

/// Propagate mean and covariance one step: the translational block follows
/// the double-integrator model driven by the commanded acceleration, the
/// reference quaternion follows the gyro, and the attitude covariance picks
/// up gyro noise.
MekfState predict(const MekfState& s, const Eigen::Vector3d& accel,
                  const Eigen::Vector3d& gyro, double dt, const SensorConfig& cfg);

struct RangeUpdate {
  MekfState state;
  bool gated = false;
  double innovation = 0.0;
  double innovation_var = 0.0;
};

/// Scalar range update with h(x) = ||rho + D_hat tag - anchor|| linearized at
/// the estimate and a Joseph-form covariance update. Measurements outside the
/// innovation gate leave the state untouched and are flagged. The update acts
/// on the translational filter; at desk scale the attitude lever-arm coupling
/// sits well below the range noise floor, so the attitude filter stays
/// gyro-driven.
RangeUpdate update_range(const MekfState& s, const RangeMeasurement& z,
                         const SensorConfig& cfg);

/// Fold the attitude error parameters into the reference quaternion and
/// reset them.
MekfState fold_attitude(const MekfState& s);

/// Position uncertainty buffer eta = xi * ||sqrt(diag(P))(1:3)||.
double uncertainty_buffer(const MekfState& s, double xi);

}  // namespace proxsafe::estimation

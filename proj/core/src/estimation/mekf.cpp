#include "proxsafe/estimation/mekf.hpp"

#include <cmath>
#include <stdexcept>

#include "proxsafe/common/math.hpp"

namespace proxsafe::estimation {

void SensorConfig::validate() const {
  if (anchors.size() < 4)
    throw std::invalid_argument("SensorConfig: need at least 4 anchors for 3D position");
  if (range_sigma <= 0.0 || gyro_sigma <= 0.0)
    throw std::invalid_argument("SensorConfig: noise sigmas must be positive");
}

namespace {

template <typename M>
void symmetrize(M& p) {
  p = 0.5 * (p + p.transpose()).eval();
}

}  // namespace

MekfState predict(const MekfState& s, const Eigen::Vector3d& accel,
                  const Eigen::Vector3d& gyro, double dt, const SensorConfig& cfg) {
  MekfState out = s;

  Eigen::Matrix<double, 6, 6> a = Eigen::Matrix<double, 6, 6>::Identity();
  a.topRightCorner(3, 3) = dt * Eigen::Matrix3d::Identity();
  Eigen::Matrix<double, 6, 3> b;
  b.topRows(3) = 0.5 * dt * dt * Eigen::Matrix3d::Identity();
  b.bottomRows(3) = dt * Eigen::Matrix3d::Identity();

  out.trans_mean = a * s.trans_mean + b * accel;

  // Exact discretization of continuous white acceleration noise.
  const double q = cfg.accel_noise_density * cfg.accel_noise_density;
  Eigen::Matrix<double, 6, 6> qd = Eigen::Matrix<double, 6, 6>::Zero();
  const Eigen::Matrix3d i3 = Eigen::Matrix3d::Identity();
  qd.topLeftCorner(3, 3) = q * dt * dt * dt / 3.0 * i3;
  qd.topRightCorner(3, 3) = q * dt * dt / 2.0 * i3;
  qd.bottomLeftCorner(3, 3) = qd.topRightCorner(3, 3);
  qd.bottomRightCorner(3, 3) = q * dt * i3;

  out.trans_cov = a * s.trans_cov * a.transpose() + qd;
  symmetrize(out.trans_cov);

  // Reference quaternion follows the measured rate; the small-angle error
  // state transitions through the body rotation over the step.
  out.ref_quat = (s.ref_quat * quat_exp(gyro * dt)).normalized();
  const Eigen::Matrix3d phi = quat_exp(gyro * dt).toRotationMatrix().transpose();
  out.att_cov = phi * s.att_cov * phi.transpose() +
                cfg.gyro_sigma * cfg.gyro_sigma * dt * i3;
  symmetrize(out.att_cov);
  return out;
}

RangeUpdate update_range(const MekfState& s, const RangeMeasurement& z,
                         const SensorConfig& cfg) {
  if (z.anchor_id < 0 || z.anchor_id >= static_cast<int>(cfg.anchors.size()))
    throw std::invalid_argument("update_range: unknown anchor id");
  if (z.range < 0.0) throw std::invalid_argument("update_range: negative range");

  RangeUpdate out;
  out.state = s;

  const Eigen::Vector3d tag_pos =
      s.trans_mean.head<3>() + s.ref_quat.toRotationMatrix() * cfg.tag_offset;
  const Eigen::Vector3d offset = tag_pos - cfg.anchors[static_cast<std::size_t>(z.anchor_id)];
  const double predicted = offset.norm();
  if (predicted < 1e-9) return out;  // tag on top of the anchor, direction undefined

  Eigen::Matrix<double, 1, 6> h = Eigen::Matrix<double, 1, 6>::Zero();
  h.head<3>() = offset.transpose() / predicted;

  const double r = cfg.range_sigma * cfg.range_sigma;
  const double innov = z.range - predicted;
  const double innov_var = (h * s.trans_cov * h.transpose())(0) + r;
  out.innovation = innov;
  out.innovation_var = innov_var;

  if (innov * innov > cfg.gate_sigmas * cfg.gate_sigmas * innov_var) {
    out.gated = true;
    return out;
  }

  const Eigen::Matrix<double, 6, 1> k = s.trans_cov * h.transpose() / innov_var;
  out.state.trans_mean = s.trans_mean + k * innov;
  const Eigen::Matrix<double, 6, 6> ikh =
      Eigen::Matrix<double, 6, 6>::Identity() - k * h;
  out.state.trans_cov = ikh * s.trans_cov * ikh.transpose() + k * r * k.transpose();
  symmetrize(out.state.trans_cov);
  return out;
}

MekfState fold_attitude(const MekfState& s) {
  MekfState out = s;
  const Eigen::Vector3d half = 0.5 * s.att_err;
  Eigen::Quaterniond dq(1.0, half.x(), half.y(), half.z());
  dq.normalize();
  out.ref_quat = (dq * s.ref_quat).normalized();
  out.att_err.setZero();
  return out;
}

double uncertainty_buffer(const MekfState& s, double xi) {
  if (xi <= 0.0) throw std::invalid_argument("uncertainty_buffer: xi must be positive");
  const double sum = s.trans_cov(0, 0) + s.trans_cov(1, 1) + s.trans_cov(2, 2);
  return xi * std::sqrt(std::max(0.0, sum));
}

}  // namespace proxsafe::estimation

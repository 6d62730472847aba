#pragma once

#include <Eigen/Dense>

namespace proxsafe::dynamics {

/// Exact zero-order-hold discretization of the translational agent model
///   p_ddot = thrust_scale * u,   thrust_scale = 1 / (sqrt(2) m),
/// with state x = (p, v) in R^6 and per-axis force input u in R^3. The
/// 1/sqrt(2) factor is the X-configuration nozzle effectiveness of the agent
/// and is kept configurable.
struct DoubleIntegrator {
  Eigen::MatrixXd a;  // 6x6
  Eigen::MatrixXd b;  // 6x3, maps force (N) to state
  Eigen::MatrixXd c;  // output map, identity by default
  double dt = 0.1;
  double mass = 1.0;
  double u_max = 0.025;      // N, per-axis bound
  double thrust_scale = 0.0;  // accel per unit force

  Eigen::VectorXd step(const Eigen::VectorXd& x, const Eigen::Vector3d& u) const {
    return a * x + b * u;
  }
};

DoubleIntegrator discretize(double dt, double mass, double u_max = 0.025);

}  // namespace proxsafe::dynamics

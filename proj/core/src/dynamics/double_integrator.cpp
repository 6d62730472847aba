#include "proxsafe/dynamics/double_integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace proxsafe::dynamics {

DoubleIntegrator discretize(double dt, double mass, double u_max) {
  if (dt <= 0.0) throw std::invalid_argument("discretize: dt must be positive");
  if (mass <= 0.0) throw std::invalid_argument("discretize: mass must be positive");

  DoubleIntegrator m;
  m.dt = dt;
  m.mass = mass;
  m.u_max = u_max;
  m.thrust_scale = 1.0 / (std::sqrt(2.0) * mass);

  const Eigen::Matrix3d i3 = Eigen::Matrix3d::Identity();
  m.a = Eigen::MatrixXd::Zero(6, 6);
  m.a.topLeftCorner(3, 3) = i3;
  m.a.topRightCorner(3, 3) = dt * i3;
  m.a.bottomRightCorner(3, 3) = i3;

  m.b = Eigen::MatrixXd::Zero(6, 3);
  m.b.topRows(3) = 0.5 * dt * dt * m.thrust_scale * i3;
  m.b.bottomRows(3) = dt * m.thrust_scale * i3;

  m.c = Eigen::MatrixXd::Identity(6, 6);
  return m;
}

}  // namespace proxsafe::dynamics

#include "proxsafe/dynamics/rigid_body.hpp"

#include <stdexcept>

#include "proxsafe/common/math.hpp"

namespace proxsafe::dynamics {

InertiaModel InertiaModel::make(const Eigen::Matrix3d& carrier,
                                const Eigen::Matrix3d& agent, double mass,
                                std::vector<Eigen::Vector3d> anchors,
                                const Eigen::Vector3d& tag) {
  auto check_spd = [](const Eigen::Matrix3d& m, const char* what) {
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9)
      throw std::invalid_argument(std::string(what) + ": inertia not symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
    if (es.eigenvalues().minCoeff() <= 0.0)
      throw std::invalid_argument(std::string(what) + ": inertia not positive definite");
  };
  check_spd(carrier, "carrier");
  check_spd(agent, "agent");
  if (mass <= 0.0) throw std::invalid_argument("mass must be positive");
  InertiaModel m;
  m.carrier_inertia = carrier;
  m.agent_inertia = agent;
  m.mass = mass;
  m.anchor_points = std::move(anchors);
  m.tag_point = tag;
  return m;
}

namespace {

struct Deriv {
  Eigen::Vector3d rho_dot;
  Eigen::Vector3d rho_ddot;
  Eigen::Vector4d q_dot;  // (w, x, y, z)
  Eigen::Vector3d omega_dot;
};

Eigen::Vector4d coeffs(const Eigen::Quaterniond& q) {
  return {q.w(), q.x(), q.y(), q.z()};
}

Eigen::Quaterniond from_coeffs(const Eigen::Vector4d& v) {
  return {v(0), v(1), v(2), v(3)};
}

Deriv derivative(const RigidBodyState& s, const InertiaModel& inertia,
                 const Eigen::Vector3d& torque, const Eigen::Vector3d& base_accel,
                 AttitudeModel model) {
  const Eigen::Matrix3d d = s.q.toRotationMatrix();  // agent body -> carrier
  const Eigen::Vector3d omega_body = d.transpose() * s.omega;

  // Both forms evaluate the same body-frame Euler equation; the carrier-frame
  // premultiplied variant keeps the cross product in carrier coordinates.
  Eigen::Vector3d omega_dot;
  const Eigen::Matrix3d i1 = inertia.agent_inertia;
  if (model == AttitudeModel::standard_euler) {
    const Eigen::Vector3d wdot_body =
        i1.ldlt().solve(torque - omega_body.cross(i1 * omega_body));
    omega_dot = d * wdot_body;
  } else {
    omega_dot = d * i1.ldlt().solve(torque - omega_body.cross(i1 * omega_body));
  }

  // Tag kinematics: rho tracks base + rotating mount lever arm, so the lever
  // arm is the body-frame tag point expressed at the current attitude.
  const Eigen::Vector3d lever = d * inertia.tag_point;
  Deriv out;
  out.rho_dot = s.rho_dot;
  out.rho_ddot = base_accel + omega_dot.cross(lever) + s.omega.cross(s.omega.cross(lever));
  out.omega_dot = omega_dot;

  // q_dot = 0.5 q * (0, omega_body)
  const Eigen::Quaterniond wq(0.0, omega_body.x(), omega_body.y(), omega_body.z());
  const Eigen::Quaterniond qd = s.q * wq;
  out.q_dot = 0.5 * coeffs(qd);
  return out;
}

RigidBodyState apply(const RigidBodyState& s, const Deriv& d, double h) {
  RigidBodyState out;
  out.rho = s.rho + h * d.rho_dot;
  out.rho_dot = s.rho_dot + h * d.rho_ddot;
  out.q = from_coeffs(coeffs(s.q) + h * d.q_dot);
  out.omega = s.omega + h * d.omega_dot;
  return out;
}

}  // namespace

RigidBodyState propagate_coupled(const RigidBodyState& s, const InertiaModel& inertia,
                                 const Eigen::Vector3d& torque,
                                 const Eigen::Vector3d& base_accel, double dt,
                                 AttitudeModel model) {
  auto f = [&](const RigidBodyState& state) {
    return derivative(state, inertia, torque, base_accel, model);
  };
  const Deriv k1 = f(s);
  const Deriv k2 = f(apply(s, k1, 0.5 * dt));
  const Deriv k3 = f(apply(s, k2, 0.5 * dt));
  const Deriv k4 = f(apply(s, k3, dt));

  RigidBodyState out;
  out.rho = s.rho + dt / 6.0 * (k1.rho_dot + 2 * k2.rho_dot + 2 * k3.rho_dot + k4.rho_dot);
  out.rho_dot =
      s.rho_dot + dt / 6.0 * (k1.rho_ddot + 2 * k2.rho_ddot + 2 * k3.rho_ddot + k4.rho_ddot);
  out.omega =
      s.omega + dt / 6.0 * (k1.omega_dot + 2 * k2.omega_dot + 2 * k3.omega_dot + k4.omega_dot);
  const Eigen::Vector4d qc =
      coeffs(s.q) + dt / 6.0 * (k1.q_dot + 2 * k2.q_dot + 2 * k3.q_dot + k4.q_dot);
  out.q = from_coeffs(qc);
  out.q.normalize();
  return out;
}

}  // namespace proxsafe::dynamics

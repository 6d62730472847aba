#include "proxsafe/mpc/tracker.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace proxsafe::mpc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MpcWeights MpcWeights::standard(int input_dim, int output_dim, double w_pos,
                                double w_vel, double w_input, double u_bound) {
  MpcWeights w;
  w.w_u = w_input * Eigen::MatrixXd::Identity(input_dim, input_dim);
  w.w_y = Eigen::MatrixXd::Identity(output_dim, output_dim);
  for (int i = 0; i < output_dim; ++i) w.w_y(i, i) = i < 3 ? w_pos : w_vel;
  w.u_max = Eigen::VectorXd::Constant(input_dim, u_bound);
  w.u_min = Eigen::VectorXd::Constant(input_dim, -u_bound);
  w.y_max = Eigen::VectorXd::Constant(output_dim, kInf);
  w.y_min = Eigen::VectorXd::Constant(output_dim, -kInf);
  w.v_u_max = Eigen::VectorXd::Zero(input_dim);  // hard input box
  w.v_u_min = Eigen::VectorXd::Zero(input_dim);
  w.v_y_max = Eigen::VectorXd::Ones(output_dim);
  w.v_y_min = Eigen::VectorXd::Ones(output_dim);
  return w;
}

TrackingSolution solve_tracking(const Eigen::VectorXd& x0, const Eigen::VectorXd& y_ref,
                                const PredictionModel& pm, const MpcWeights& w,
                                const convex::Tolerances& tol) {
  const int p = pm.horizon;
  const int m = pm.input_dim;
  const int ny = pm.output_dim;
  const int nu = p * m;
  if (y_ref.size() != p * ny)
    throw std::invalid_argument("solve_tracking: reference window size mismatch");
  if (x0.size() != pm.state_dim)
    throw std::invalid_argument("solve_tracking: state size mismatch");

  // Stacked weights.
  Eigen::MatrixXd wy_bar = Eigen::MatrixXd::Zero(p * ny, p * ny);
  Eigen::MatrixXd wu_bar = Eigen::MatrixXd::Zero(nu, nu);
  for (int k = 0; k < p; ++k) {
    wy_bar.block(k * ny, k * ny, ny, ny) = w.w_y;
    wu_bar.block(k * m, k * m, m, m) = w.w_u;
  }

  const Eigen::VectorXd free_resp = pm.s_x * x0;

  // Variables z = [u; eps].
  convex::QuadraticProgram qp;
  qp.cost_matrix = Eigen::MatrixXd::Zero(nu + 1, nu + 1);
  qp.cost_matrix.topLeftCorner(nu, nu) =
      2.0 * (wu_bar + pm.s_u.transpose() * wy_bar * pm.s_u);
  qp.cost_matrix(nu, nu) = 2.0 * w.rho;
  qp.cost_vector = Eigen::VectorXd::Zero(nu + 1);
  qp.cost_vector.head(nu) = 2.0 * pm.s_u.transpose() * wy_bar * (free_resp - y_ref);

  std::vector<Eigen::VectorXd> rows;
  std::vector<double> rhs;
  auto add_row = [&](const Eigen::VectorXd& a, double b) {
    rows.push_back(a);
    rhs.push_back(b);
  };

  for (int k = 0; k < p; ++k) {
    for (int i = 0; i < m; ++i) {
      const int col = k * m + i;
      if (std::isfinite(w.u_max(i))) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(nu + 1);
        a(col) = 1.0;
        a(nu) = -w.v_u_max(i);
        add_row(a, w.u_max(i));
      }
      if (std::isfinite(w.u_min(i))) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(nu + 1);
        a(col) = -1.0;
        a(nu) = -w.v_u_min(i);
        add_row(a, -w.u_min(i));
      }
    }
    for (int i = 0; i < ny; ++i) {
      const int row = k * ny + i;
      if (std::isfinite(w.y_max(i))) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(nu + 1);
        a.head(nu) = pm.s_u.row(row);
        a(nu) = -w.v_y_max(i);
        add_row(a, w.y_max(i) - free_resp(row));
      }
      if (std::isfinite(w.y_min(i))) {
        Eigen::VectorXd a = Eigen::VectorXd::Zero(nu + 1);
        a.head(nu) = -pm.s_u.row(row);
        a(nu) = -w.v_y_min(i);
        add_row(a, -w.y_min(i) + free_resp(row));
      }
    }
  }
  {
    // eps >= 0
    Eigen::VectorXd a = Eigen::VectorXd::Zero(nu + 1);
    a(nu) = -1.0;
    add_row(a, 0.0);
  }

  qp.ineq_matrix.resize(static_cast<int>(rows.size()), nu + 1);
  qp.ineq_vector.resize(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    qp.ineq_matrix.row(static_cast<int>(i)) = rows[i].transpose();
    qp.ineq_vector(static_cast<int>(i)) = rhs[i];
  }
  qp.eq_matrix.resize(0, nu + 1);
  qp.eq_vector.resize(0);

  const convex::SolveResult sol = convex::solve_qp(qp, tol);

  TrackingSolution out;
  out.status = sol.status;
  if (!sol.ok()) {
    out.u_sequence = Eigen::MatrixXd::Zero(m, p);
    out.epsilon = 0.0;
    out.fallback = true;
    return out;
  }
  out.u_sequence.resize(m, p);
  for (int k = 0; k < p; ++k) out.u_sequence.col(k) = sol.primal.segment(k * m, m);
  out.epsilon = sol.primal(nu);
  out.objective = sol.objective;
  return out;
}

}  // namespace proxsafe::mpc

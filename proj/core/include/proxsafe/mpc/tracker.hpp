#pragma once

#include <Eigen/Dense>

#include "proxsafe/convex/types.hpp"
#include "proxsafe/mpc/prediction.hpp"

namespace proxsafe::mpc {

/// Weights and softened bounds of the receding-horizon tracking problem.
/// Softness vectors scale the shared slack in each constraint row; a zero
/// entry makes that row hard. Infinite bounds drop the row entirely.
struct MpcWeights {
  Eigen::MatrixXd w_u;  // input weight, m x m
  Eigen::MatrixXd w_y;  // output-error weight, ny x ny
  double rho = 1e4;     // slack weight

  Eigen::VectorXd u_max, u_min;      // m
  Eigen::VectorXd y_max, y_min;      // ny
  Eigen::VectorXd v_u_max, v_u_min;  // m, softness of input rows
  Eigen::VectorXd v_y_max, v_y_min;  // ny, softness of output rows

  /// Symmetric hard input box, free outputs; the common configuration.
  static MpcWeights standard(int input_dim, int output_dim, double w_pos,
                             double w_vel, double w_input, double u_bound);
};

struct TrackingSolution {
  Eigen::MatrixXd u_sequence;  // m x p, column k is the step-k input
  double epsilon = 0.0;
  convex::SolveStatus status = convex::SolveStatus::optimal;
  bool fallback = false;  // solver fault, zero control substituted
  double objective = 0.0;

  Eigen::Vector3d first_control() const {
    Eigen::Vector3d u = Eigen::Vector3d::Zero();
    u.head(u_sequence.rows()) = u_sequence.col(0);
    return u;
  }
};

/// Solve the soft-constrained tracking QP for the stacked reference window
/// `y_ref` (size p*ny). A solver fault degrades to zero control with the
/// fallback flag set; infeasibility cannot occur while any constraint group
/// is soft.
TrackingSolution solve_tracking(const Eigen::VectorXd& x0, const Eigen::VectorXd& y_ref,
                                const PredictionModel& pm, const MpcWeights& w,
                                const convex::Tolerances& tol = {});

}  // namespace proxsafe::mpc

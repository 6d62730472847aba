#pragma once

#include <Eigen/Dense>

#include "proxsafe/dynamics/double_integrator.hpp"

namespace proxsafe::mpc {

/// Stacked prediction over a receding horizon p:
///   y = s_x x_k + s_u [u_k; ...; u_{k+p-1}]
/// where block row k of s_x is C A^k and block (k, j) of s_u is
/// C A^{k-1-j} B for j < k.
struct PredictionModel {
  Eigen::MatrixXd s_x;  // (p*ny) x n
  Eigen::MatrixXd s_u;  // (p*ny) x (p*m), block lower triangular
  int horizon = 0;
  int input_dim = 0;
  int output_dim = 0;
  int state_dim = 0;

  /// Position rows (first 3 outputs) of prediction block `tick` (0-based)
  /// as a function of the stacked input; used for collision sensitivities.
  Eigen::MatrixXd position_rows(int tick) const {
    return s_u.middleRows(tick * output_dim, 3);
  }
};

PredictionModel build_prediction(const dynamics::DoubleIntegrator& model, int p);

}  // namespace proxsafe::mpc

#include "proxsafe/mpc/prediction.hpp"

#include <stdexcept>

namespace proxsafe::mpc {

PredictionModel build_prediction(const dynamics::DoubleIntegrator& model, int p) {
  if (p < 1) throw std::invalid_argument("build_prediction: horizon must be >= 1");
  const int n = static_cast<int>(model.a.rows());
  const int m = static_cast<int>(model.b.cols());
  const int ny = static_cast<int>(model.c.rows());

  PredictionModel pm;
  pm.horizon = p;
  pm.input_dim = m;
  pm.output_dim = ny;
  pm.state_dim = n;
  pm.s_x.resize(p * ny, n);
  pm.s_u = Eigen::MatrixXd::Zero(p * ny, p * m);

  // Powers of A built incrementally; block row k predicts y(k+1).
  Eigen::MatrixXd a_pow = model.a;
  for (int k = 0; k < p; ++k) {
    pm.s_x.middleRows(k * ny, ny) = model.c * a_pow;
    Eigen::MatrixXd impulse = model.b;  // A^0 B
    for (int j = k; j >= 0; --j) {
      pm.s_u.block(k * ny, j * m, ny, m) = model.c * impulse;
      impulse = model.a * impulse;
    }
    a_pow = model.a * a_pow;
  }
  return pm;
}

}  // namespace proxsafe::mpc

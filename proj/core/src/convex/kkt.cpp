#include "proxsafe/convex/types.hpp"

namespace proxsafe::convex {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::max_iter: return "max_iter";
  }
  return "unknown";
}

namespace {

KktResiduals residuals(const Eigen::MatrixXd& cost_matrix,
                       const Eigen::VectorXd& cost_vector,
                       const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                       const Eigen::MatrixXd& e, const Eigen::VectorXd& f,
                       const SolveResult& r) {
  KktResiduals k;
  const Eigen::VectorXd& x = r.primal;

  Eigen::VectorXd grad = cost_vector;
  if (cost_matrix.size() > 0) grad += cost_matrix * x;
  if (a.rows() > 0) grad += a.transpose() * r.ineq_duals;
  if (e.rows() > 0) grad += e.transpose() * r.eq_duals;
  k.stationarity = grad.size() > 0 ? grad.cwiseAbs().maxCoeff() : 0.0;

  if (a.rows() > 0) {
    const Eigen::VectorXd slack = a * x - b;
    k.primal_infeasibility = std::max(0.0, slack.maxCoeff());
    k.complementarity = (r.ineq_duals.array() * slack.array()).abs().maxCoeff();
    k.dual_min = r.ineq_duals.minCoeff();
  }
  if (e.rows() > 0) {
    k.primal_infeasibility =
        std::max(k.primal_infeasibility, (e * x - f).cwiseAbs().maxCoeff());
  }
  return k;
}

}  // namespace

KktResiduals kkt_residuals(const QuadraticProgram& p, const SolveResult& r) {
  return residuals(p.cost_matrix, p.cost_vector, p.ineq_matrix, p.ineq_vector,
                   p.eq_matrix, p.eq_vector, r);
}

KktResiduals kkt_residuals(const LinearProgram& p, const SolveResult& r) {
  return residuals(Eigen::MatrixXd(), p.cost_vector, p.ineq_matrix,
                   p.ineq_vector, Eigen::MatrixXd(), Eigen::VectorXd(), r);
}

}  // namespace proxsafe::convex

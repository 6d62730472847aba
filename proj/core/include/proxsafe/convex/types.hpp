#pragma once

#include <Eigen/Dense>

namespace proxsafe::convex {

enum class SolveStatus { optimal, infeasible, unbounded, max_iter };

const char* to_string(SolveStatus s);

/// Every numerical threshold used by the solvers and the KKT checker lives
/// here so tests can tighten or relax them in one place.
struct Tolerances {
  double feasibility = 1e-8;      ///< max allowed primal constraint violation
  double stationarity = 1e-8;     ///< max allowed gradient-of-Lagrangian norm
  double dual_negativity = 1e-10; ///< inequality duals may be >= -this
  double complementarity = 1e-8;  ///< max allowed |dual * slack|
  double symmetry = 1e-12;        ///< max allowed |P - P^T| entry
  double pivot = 1e-11;           ///< simplex pivot / rank threshold
  double psd_shift = 1e-10;       ///< diagonal shift applied to semidefinite costs
};

/// min 0.5 x'Px + q'x  s.t.  A x <= b,  E x = f.
/// P must be symmetric positive semidefinite.
struct QuadraticProgram {
  Eigen::MatrixXd cost_matrix;  // P
  Eigen::VectorXd cost_vector;  // q
  Eigen::MatrixXd ineq_matrix;  // A (may have 0 rows)
  Eigen::VectorXd ineq_vector;  // b
  Eigen::MatrixXd eq_matrix;    // E (may have 0 rows)
  Eigen::VectorXd eq_vector;    // f

  int num_vars() const { return static_cast<int>(cost_vector.size()); }
  int num_ineq() const { return static_cast<int>(ineq_vector.size()); }
  int num_eq() const { return static_cast<int>(eq_vector.size()); }
};

/// min c'x  s.t.  A x <= b.  x is free (not sign-constrained).
struct LinearProgram {
  Eigen::VectorXd cost_vector;  // c
  Eigen::MatrixXd ineq_matrix;  // A
  Eigen::VectorXd ineq_vector;  // b

  int num_vars() const { return static_cast<int>(cost_vector.size()); }
  int num_ineq() const { return static_cast<int>(ineq_vector.size()); }
};

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  Eigen::VectorXd primal;
  Eigen::VectorXd ineq_duals;  ///< one per inequality row, >= 0 at an optimum
  Eigen::VectorXd eq_duals;    ///< one per equality row, sign-free
  double objective = 0.0;
  int iterations = 0;

  bool ok() const { return status == SolveStatus::optimal; }
};

struct KktResiduals {
  double primal_infeasibility = 0.0;  ///< max(0, max_i (a_i x - b_i)), plus |Ex-f|
  double stationarity = 0.0;          ///< ||Px + q + A'lam + E'nu||_inf
  double dual_min = 0.0;              ///< min_i lam_i (negative = violation)
  double complementarity = 0.0;       ///< max_i |lam_i (a_i x - b_i)|

  bool within(const Tolerances& tol) const {
    return primal_infeasibility <= tol.feasibility &&
           stationarity <= tol.stationarity &&
           dual_min >= -tol.dual_negativity &&
           complementarity <= tol.complementarity;
  }
};

KktResiduals kkt_residuals(const QuadraticProgram& p, const SolveResult& r);
KktResiduals kkt_residuals(const LinearProgram& p, const SolveResult& r);

/// Dual active-set solve of a convex QP. Throws std::invalid_argument for
/// inconsistent dimensions, an asymmetric cost matrix, or an indefinite cost
/// matrix. Infeasibility is reported through the status, never thrown.
SolveResult solve_qp(const QuadraticProgram& p, const Tolerances& tol = {});

/// Two-phase dense simplex with Bland's rule. Unbounded / infeasible
/// problems are reported through the status.
SolveResult solve_lp(const LinearProgram& p, const Tolerances& tol = {});

}  // namespace proxsafe::convex

#include "proxsafe/convex/types.hpp"

#include <stdexcept>
#include <vector>

namespace proxsafe::convex {

// Dense two-phase tableau simplex on the standard form built from
//   min c'x  s.t.  A x <= b,   x free.
// Split x = u - v (u, v >= 0), add slacks, flip rows with negative rhs and
// give them artificials for phase 1. Bland's rule everywhere: lowest eligible
// index enters, lowest basic index leaves on ratio ties. That rules out
// cycling and makes degenerate solves deterministic.
SolveResult solve_lp(const LinearProgram& p, const Tolerances& tol) {
  const int n = p.num_vars();
  const int m = p.num_ineq();
  if (p.ineq_matrix.rows() != m || (m > 0 && p.ineq_matrix.cols() != n))
    throw std::invalid_argument("solve_lp: inequality block dimension mismatch");
  if (p.cost_vector.size() != n)
    throw std::invalid_argument("solve_lp: cost dimension mismatch");

  SolveResult res;
  res.ineq_duals = Eigen::VectorXd::Zero(m);
  res.eq_duals = Eigen::VectorXd::Zero(0);

  if (m == 0) {
    res.primal = Eigen::VectorXd::Zero(n);
    res.status = p.cost_vector.cwiseAbs().maxCoeff() > 0.0 ? SolveStatus::unbounded
                                                           : SolveStatus::optimal;
    return res;
  }

  // Column layout: [u (n) | v (n) | slack (m) | artificial (n_art)].
  std::vector<double> flip(m, 1.0);
  int n_art = 0;
  for (int i = 0; i < m; ++i) {
    if (p.ineq_vector(i) < 0.0) {
      flip[i] = -1.0;
      ++n_art;
    }
  }
  const int ncols = 2 * n + m + n_art;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, ncols);
  Eigen::VectorXd rhs(m);
  std::vector<int> basis(m, -1);
  for (int i = 0, art = 0; i < m; ++i) {
    a.row(i).segment(0, n) = flip[i] * p.ineq_matrix.row(i);
    a.row(i).segment(n, n) = -flip[i] * p.ineq_matrix.row(i);
    a(i, 2 * n + i) = flip[i];
    rhs(i) = flip[i] * p.ineq_vector(i);
    if (flip[i] < 0.0) {
      basis[i] = 2 * n + m + art;
      a(i, basis[i]) = 1.0;
      ++art;
    } else {
      basis[i] = 2 * n + i;
    }
  }

  const int max_iter = 10 * (m + n) + 20;
  int iter = 0;

  auto pivot = [&](int row, int col) {
    rhs(row) /= a(row, col);
    a.row(row) /= a(row, col);
    for (int r = 0; r < m; ++r) {
      if (r == row) continue;
      const double f = a(r, col);
      if (f != 0.0) {
        a.row(r) -= f * a.row(row);
        rhs(r) -= f * rhs(row);
      }
    }
    basis[row] = col;
  };

  // Reduced costs over the current (fully updated) tableau:
  //   zc_j = obj_j - sum_i obj_basis(i) * a(i, j).
  auto reduced = [&](const Eigen::VectorXd& obj) {
    Eigen::VectorXd zc = obj;
    for (int i = 0; i < m; ++i) {
      const double cb = obj(basis[i]);
      if (cb != 0.0) zc -= cb * a.row(i).transpose();
    }
    return zc;
  };

  auto run_simplex = [&](const Eigen::VectorXd& obj, int allowed_cols) -> SolveStatus {
    while (true) {
      if (++iter > max_iter) return SolveStatus::max_iter;
      const Eigen::VectorXd zc = reduced(obj);
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        if (zc(j) < -tol.pivot) {
          enter = j;  // Bland: lowest index
          break;
        }
      }
      if (enter < 0) return SolveStatus::optimal;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        if (a(i, enter) > tol.pivot) {
          const double ratio = rhs(i) / a(i, enter);
          if (leave < 0 || ratio < best - 1e-15 ||
              (ratio < best + 1e-15 && basis[i] < basis[leave])) {
            best = leave < 0 ? ratio : std::min(ratio, best);
            leave = i;
          }
        }
      }
      if (leave < 0) return SolveStatus::unbounded;
      pivot(leave, enter);
    }
  };

  // Phase 1: minimize the sum of artificials.
  if (n_art > 0) {
    Eigen::VectorXd obj1 = Eigen::VectorXd::Zero(ncols);
    obj1.tail(n_art).setOnes();
    const SolveStatus st = run_simplex(obj1, ncols);
    if (st == SolveStatus::max_iter) {
      res.status = st;
      return res;
    }
    double infeas = 0.0;
    for (int i = 0; i < m; ++i)
      if (basis[i] >= 2 * n + m) infeas += rhs(i);
    if (infeas > tol.feasibility) {
      res.status = SolveStatus::infeasible;
      return res;
    }
    // Pivot leftover zero-level artificials out where possible; a fully zero
    // row is redundant and its artificial may stay basic at level zero.
    for (int i = 0; i < m; ++i) {
      if (basis[i] < 2 * n + m) continue;
      for (int j = 0; j < 2 * n + m; ++j) {
        if (std::abs(a(i, j)) > tol.pivot) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2: original objective, artificial columns barred from entering.
  Eigen::VectorXd obj2 = Eigen::VectorXd::Zero(ncols);
  obj2.segment(0, n) = p.cost_vector;
  obj2.segment(n, n) = -p.cost_vector;
  const SolveStatus st = run_simplex(obj2, 2 * n + m);
  if (st != SolveStatus::optimal) {
    res.status = st;
    return res;
  }

  Eigen::VectorXd z = Eigen::VectorXd::Zero(ncols);
  for (int i = 0; i < m; ++i) z(basis[i]) = rhs(i);
  res.primal = z.segment(0, n) - z.segment(n, n);
  res.objective = p.cost_vector.dot(res.primal);

  // The multiplier of row a_i x <= b_i equals the final reduced cost of that
  // row's slack column: with stationarity c + A'lam = 0 one gets
  // lam_i = zc(slack_i) >= 0, and complementary slackness holds because basic
  // slacks have zero reduced cost.
  const Eigen::VectorXd zc = reduced(obj2);
  for (int j = 0; j < m; ++j) res.ineq_duals(j) = std::max(0.0, zc(2 * n + j));

  res.status = SolveStatus::optimal;
  res.iterations = iter;
  return res;
}

}  // namespace proxsafe::convex

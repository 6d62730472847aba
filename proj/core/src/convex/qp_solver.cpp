#include "proxsafe/convex/types.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace proxsafe::convex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One entry of the working set: an equality row or an inequality row held
// tight. Equalities are added first and are never dropped; their duals are
// sign-free. `sign` records the orientation an equality was driven in from,
// so its reported dual is sign * accumulated step.
struct ActiveRow {
  bool is_eq;
  int row;
  double sign;
};

Eigen::LLT<Eigen::MatrixXd> validate_and_factor(const QuadraticProgram& p,
                                                const Tolerances& tol) {
  const int n = p.num_vars();
  if (p.cost_matrix.rows() != n || p.cost_matrix.cols() != n)
    throw std::invalid_argument("solve_qp: cost matrix dimension mismatch");
  if (p.ineq_matrix.rows() != p.ineq_vector.size() ||
      (p.num_ineq() > 0 && p.ineq_matrix.cols() != n))
    throw std::invalid_argument("solve_qp: inequality block dimension mismatch");
  if (p.eq_matrix.rows() != p.eq_vector.size() ||
      (p.num_eq() > 0 && p.eq_matrix.cols() != n))
    throw std::invalid_argument("solve_qp: equality block dimension mismatch");

  const double asym = (p.cost_matrix - p.cost_matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol.symmetry * std::max(1.0, p.cost_matrix.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("solve_qp: cost matrix is not symmetric");

  Eigen::LLT<Eigen::MatrixXd> llt(p.cost_matrix);
  if (llt.info() == Eigen::Success) return llt;

  // Semidefinite costs get a tiny diagonal shift; indefinite ones are rejected.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p.cost_matrix, Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, p.cost_matrix.cwiseAbs().maxCoeff());
  if (es.eigenvalues().minCoeff() < -1e-8 * scale)
    throw std::invalid_argument("solve_qp: cost matrix is not positive semidefinite");
  Eigen::MatrixXd shifted = p.cost_matrix;
  shifted.diagonal().array() += tol.psd_shift * scale;
  llt.compute(shifted);
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("solve_qp: cost matrix factorization failed");
  return llt;
}

}  // namespace

// Dual active-set method (Goldfarb-Idnani): start at the unconstrained
// minimum, repeatedly drive the most violated constraint to equality while
// keeping the iterate optimal for the rows already held tight. Partial steps
// drop rows whose duals would cross zero. The method needs no feasible
// starting point and terminates with exact duals, which the collision-scaling
// gradients downstream rely on.
SolveResult solve_qp(const QuadraticProgram& p, const Tolerances& tol) {
  const int n = p.num_vars();
  const int m = p.num_ineq();
  const int me = p.num_eq();

  Eigen::LLT<Eigen::MatrixXd> llt = validate_and_factor(p, tol);

  SolveResult res;
  res.ineq_duals = Eigen::VectorXd::Zero(m);
  res.eq_duals = Eigen::VectorXd::Zero(me);

  Eigen::VectorXd x = llt.solve(-p.cost_vector);

  std::vector<ActiveRow> active;
  std::vector<double> lambda;     // duals aligned with `active`
  std::vector<char> in_active(m, 0);
  Eigen::MatrixXd z_cols(n, 0);   // P^-1 N, one column per active row
  Eigen::MatrixXd gram(0, 0);     // N' P^-1 N

  auto row_vec = [&](const ActiveRow& a) -> Eigen::VectorXd {
    Eigen::VectorXd c = a.is_eq ? p.eq_matrix.row(a.row).transpose()
                                : p.ineq_matrix.row(a.row).transpose();
    return a.sign * c;
  };

  auto append_active = [&](const ActiveRow& a, double lam) {
    const Eigen::VectorXd c = row_vec(a);
    const Eigen::VectorXd zc = llt.solve(c);
    const int q = static_cast<int>(active.size());
    z_cols.conservativeResize(Eigen::NoChange, q + 1);
    z_cols.col(q) = zc;
    Eigen::MatrixXd g(q + 1, q + 1);
    g.topLeftCorner(q, q) = gram;
    for (int i = 0; i < q; ++i) {
      const double d = z_cols.col(i).dot(c);
      g(i, q) = d;
      g(q, i) = d;
    }
    g(q, q) = zc.dot(c);
    gram = std::move(g);
    active.push_back(a);
    lambda.push_back(lam);
    if (!a.is_eq) in_active[a.row] = 1;
  };

  auto remove_active = [&](int k) {
    const int q = static_cast<int>(active.size());
    if (!active[k].is_eq) in_active[active[k].row] = 0;
    for (int j = k; j + 1 < q; ++j) z_cols.col(j) = z_cols.col(j + 1);
    z_cols.conservativeResize(Eigen::NoChange, q - 1);
    Eigen::MatrixXd g(q - 1, q - 1);
    for (int i = 0, gi = 0; i < q; ++i) {
      if (i == k) continue;
      for (int j = 0, gj = 0; j < q; ++j) {
        if (j == k) continue;
        g(gi, gj) = gram(i, j);
        ++gj;
      }
      ++gi;
    }
    gram = std::move(g);
    active.erase(active.begin() + k);
    lambda.erase(lambda.begin() + k);
  };

  auto finish = [&](SolveStatus st, int iters) {
    res.status = st;
    res.primal = x;
    res.objective = 0.5 * x.dot(p.cost_matrix * x) + p.cost_vector.dot(x);
    res.iterations = iters;
    return res;
  };

  const int max_iter = 10 * (m + me + n) + 10;
  int iter = 0;
  int next_eq = 0;

  while (true) {
    if (iter > max_iter) return finish(SolveStatus::max_iter, iter);

    // Candidate selection: all equalities first (in index order), then the
    // most violated inequality; ties resolve to the lowest row index.
    ActiveRow cand{false, -1, 1.0};
    double viol = 0.0;
    if (next_eq < me) {
      const double r = p.eq_matrix.row(next_eq).dot(x) - p.eq_vector(next_eq);
      cand = ActiveRow{true, next_eq, r >= 0 ? 1.0 : -1.0};
      viol = std::abs(r);
      ++next_eq;
      // Exactly satisfied equalities still join the working set so later
      // steps keep them tight.
    } else {
      int worst = -1;
      double worst_v = tol.feasibility;
      for (int i = 0; i < m; ++i) {
        if (in_active[i]) continue;
        const double r = p.ineq_matrix.row(i).dot(x) - p.ineq_vector(i);
        if (r > worst_v) {
          worst_v = r;
          worst = i;
        }
      }
      if (worst < 0) break;  // primal feasible + dual feasible = optimal
      cand = ActiveRow{false, worst, 1.0};
      viol = worst_v;
    }

    const Eigen::VectorXd c = row_vec(cand);
    double lam_p = 0.0;

    // Inner loop: step toward `cand`, dropping blocking rows on the way.
    while (true) {
      ++iter;
      if (iter > max_iter) return finish(SolveStatus::max_iter, iter);

      const int q = static_cast<int>(active.size());
      const Eigen::VectorXd pinv_c = llt.solve(c);
      Eigen::VectorXd r_dual;
      Eigen::VectorXd hc = pinv_c;
      if (q > 0) {
        const Eigen::VectorXd rhs = z_cols.transpose() * c;
        r_dual = gram.ldlt().solve(rhs);
        hc -= z_cols * r_dual;
      }
      const double curvature = c.dot(hc);

      double t_full = kInf;
      if (curvature > tol.pivot) t_full = std::max(0.0, viol / curvature);

      // Blocking-constraint search; ties go to the lowest row index so
      // degenerate problems solve deterministically.
      double t_partial = kInf;
      int drop = -1;
      for (int k = 0; k < q; ++k) {
        if (active[k].is_eq || r_dual(k) <= tol.pivot) continue;
        const double t = lambda[k] / r_dual(k);
        if (drop < 0 || t < t_partial - 1e-15 ||
            (t < t_partial + 1e-15 && active[k].row < active[drop].row)) {
          t_partial = std::min(t, drop < 0 ? kInf : t_partial);
          drop = k;
        }
      }

      const double t = std::min(t_full, t_partial);
      if (t == kInf) return finish(SolveStatus::infeasible, iter);

      x -= t * hc;
      for (int k = 0; k < q; ++k) lambda[k] -= t * r_dual(k);
      lam_p += t;
      viol -= t * curvature;

      if (t_full <= t_partial) {
        append_active(cand, lam_p);
        break;
      }
      remove_active(drop);
    }
  }

  // Final polish: re-solve the equality-constrained problem on the final
  // working set from a fresh KKT factorization to shed accumulated drift.
  const int q = static_cast<int>(active.size());
  if (q > 0) {
    Eigen::MatrixXd nmat(q, n);
    Eigen::VectorXd dvec(q);
    for (int k = 0; k < q; ++k) {
      const ActiveRow& a = active[k];
      nmat.row(k) = row_vec(a).transpose();
      dvec(k) = a.sign * (a.is_eq ? p.eq_vector(a.row) : p.ineq_vector(a.row));
    }
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(n + q, n + q);
    kkt.topLeftCorner(n, n) = p.cost_matrix;
    kkt.block(0, n, n, q) = nmat.transpose();
    kkt.block(n, 0, q, n) = nmat;
    Eigen::VectorXd rhs(n + q);
    rhs.head(n) = -p.cost_vector;
    rhs.tail(q) = dvec;
    const Eigen::VectorXd sol = kkt.fullPivLu().solve(rhs);
    const Eigen::VectorXd x_ref = sol.head(n);
    const Eigen::VectorXd lam_ref = sol.tail(q);
    bool dual_ok = sol.allFinite();
    for (int k = 0; k < q && dual_ok; ++k)
      if (!active[k].is_eq && lam_ref(k) < -tol.dual_negativity) dual_ok = false;
    // Keep the polished point only if it preserved dual feasibility and did
    // not wander off the unpolished iterate (rank-deficient working sets).
    if (dual_ok && (x_ref - x).cwiseAbs().maxCoeff() < 1e-6 * std::max(1.0, x.cwiseAbs().maxCoeff())) {
      x = x_ref;
      for (int k = 0; k < q; ++k) lambda[k] = lam_ref(k);
    }
  }

  res.status = SolveStatus::optimal;
  res.primal = x;
  for (int k = 0; k < q; ++k) {
    const ActiveRow& a = active[k];
    if (a.is_eq)
      res.eq_duals(a.row) = a.sign * lambda[k];
    else
      res.ineq_duals(a.row) = std::max(0.0, lambda[k]);
  }
  res.objective = 0.5 * x.dot(p.cost_matrix * x) + p.cost_vector.dot(x);
  res.iterations = iter;
  return res;
}

}  // namespace proxsafe::convex

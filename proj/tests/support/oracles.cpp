#include "oracles.hpp"

#include <cmath>
#include <limits>

namespace oracles {

std::uint64_t TestRng::next_u64() {
  // splitmix64
  state_ += 0x9E3779B97f4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double TestRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double TestRng::gaussian(double mean, double sigma) {
  if (have_spare_) {
    have_spare_ = false;
    return mean + sigma * spare_;
  }
  double u1 = 0.0;
  while (u1 <= 0.0) u1 = uniform(0.0, 1.0);
  const double u2 = uniform(0.0, 1.0);
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  have_spare_ = true;
  return mean + sigma * r * std::cos(theta);
}

Eigen::VectorXd TestRng::uniform_vec(int n, double lo, double hi) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

Eigen::VectorXd TestRng::gaussian_vec(int n, double sigma) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = gaussian(0.0, sigma);
  return v;
}

Eigen::VectorXd grid_search_qp(const Eigen::MatrixXd& p, const Eigen::VectorXd& q,
                               const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                               double step) {
  const int n = static_cast<int>(q.size());
  Eigen::VectorXi counts(n);
  for (int i = 0; i < n; ++i)
    counts(i) = static_cast<int>(std::floor((hi(i) - lo(i)) / step + 1e-9)) + 1;

  Eigen::VectorXd best;
  double best_f = std::numeric_limits<double>::infinity();
  Eigen::VectorXd x(n);
  Eigen::VectorXi idx = Eigen::VectorXi::Zero(n);
  while (true) {
    for (int i = 0; i < n; ++i) x(i) = lo(i) + step * idx(i);
    const double f = 0.5 * x.dot(p * x) + q.dot(x);
    if (f < best_f) {
      best_f = f;
      best = x;
    }
    int d = 0;
    while (d < n) {
      if (++idx(d) < counts(d)) break;
      idx(d) = 0;
      ++d;
    }
    if (d == n) break;
  }
  return best;
}

std::optional<LpVertexSolution> lp_vertex_enumeration(const Eigen::MatrixXd& a,
                                                      const Eigen::VectorXd& b,
                                                      const Eigen::Vector2d& c) {
  const int m = static_cast<int>(b.size());
  std::optional<LpVertexSolution> best;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      Eigen::Matrix2d basis;
      basis.row(0) = a.row(i);
      basis.row(1) = a.row(j);
      if (std::abs(basis.determinant()) < 1e-12) continue;
      const Eigen::Vector2d v = basis.inverse() * Eigen::Vector2d(b(i), b(j));
      if (((a * v - b).array() > 1e-9).any()) continue;
      const double f = c.dot(v);
      if (!best || f < best->objective - 1e-15) best = LpVertexSolution{v, f};
    }
  }
  return best;
}

Eigen::VectorXd central_difference(const std::function<double(const Eigen::VectorXd&)>& f,
                                   const Eigen::VectorXd& x, double h) {
  Eigen::VectorXd g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    g(i) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

Eigen::Vector3d gauss_newton_trilateration(const std::vector<Eigen::Vector3d>& anchors,
                                           const std::vector<std::pair<int, double>>& ranges,
                                           const Eigen::Vector3d& initial, int iterations) {
  Eigen::Vector3d x = initial;
  const int m = static_cast<int>(ranges.size());
  for (int it = 0; it < iterations; ++it) {
    Eigen::MatrixXd j(m, 3);
    Eigen::VectorXd r(m);
    for (int i = 0; i < m; ++i) {
      const Eigen::Vector3d d = x - anchors[static_cast<std::size_t>(ranges[i].first)];
      const double nrm = std::max(d.norm(), 1e-12);
      j.row(i) = d.transpose() / nrm;
      r(i) = nrm - ranges[i].second;
    }
    const Eigen::Vector3d step = (j.transpose() * j).ldlt().solve(j.transpose() * r);
    x -= step;
    if (step.norm() < 1e-14) break;
  }
  return x;
}

Eigen::MatrixXd batch_covariance(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& p0,
                                 const Eigen::MatrixXd& q, int steps) {
  Eigen::MatrixXd phik = Eigen::MatrixXd::Identity(phi.rows(), phi.cols());
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(phi.rows(), phi.cols());
  for (int k = 0; k < steps; ++k) {
    acc += phik * q * phik.transpose();
    phik = phi * phik;
  }
  return phik * p0 * phik.transpose() + acc;
}

}  // namespace oracles

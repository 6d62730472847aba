#pragma once

// Independent reference computations used by the test suites. Everything in
// here is deliberately brute force and shares no code with the library path
// it checks.

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>

namespace oracles {

/// Deterministic test RNG: splitmix64-seeded xorshift-style stream with
/// Box-Muller gaussians. Self-contained so tests do not depend on library
/// randomness.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform(double lo, double hi);
  double gaussian(double mean = 0.0, double sigma = 1.0);
  Eigen::VectorXd uniform_vec(int n, double lo, double hi);
  Eigen::VectorXd gaussian_vec(int n, double sigma = 1.0);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Dense grid search for min 0.5 x'Px + q'x over the box [lo, hi]^n with a
/// fixed step. Returns the best grid point.
Eigen::VectorXd grid_search_qp(const Eigen::MatrixXd& p, const Eigen::VectorXd& q,
                               const Eigen::VectorXd& lo, const Eigen::VectorXd& hi,
                               double step);

/// Vertex enumeration for 2-variable LPs min c'x s.t. Ax <= b: intersect all
/// row pairs, keep feasible vertices, return the best. Empty when the
/// feasible set has no vertex or is empty.
struct LpVertexSolution {
  Eigen::Vector2d x;
  double objective;
};
std::optional<LpVertexSolution> lp_vertex_enumeration(const Eigen::MatrixXd& a,
                                                      const Eigen::VectorXd& b,
                                                      const Eigen::Vector2d& c);

/// Central finite-difference gradient of a scalar function.
Eigen::VectorXd central_difference(const std::function<double(const Eigen::VectorXd&)>& f,
                                   const Eigen::VectorXd& x, double h = 1e-6);

/// Batch Gauss-Newton trilateration: least-squares position from scalar
/// ranges to known anchors.
Eigen::Vector3d gauss_newton_trilateration(const std::vector<Eigen::Vector3d>& anchors,
                                           const std::vector<std::pair<int, double>>& ranges,
                                           const Eigen::Vector3d& initial,
                                           int iterations = 25);

/// Batch linear-system covariance propagation P_N = Phi^N P0 (Phi^N)' +
/// sum_k Phi^k Q (Phi^k)'.
Eigen::MatrixXd batch_covariance(const Eigen::MatrixXd& phi, const Eigen::MatrixXd& p0,
                                 const Eigen::MatrixXd& q, int steps);

}  // namespace oracles

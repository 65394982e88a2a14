#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "linerig/error.hpp"
#include "linerig/refute.hpp"

namespace linerig {

namespace {

// Levenberg-Marquardt on squared edge-length residuals, in coordinates
// normalized so the 1-D input has spread 1.
class EdgeLengthSolver {
 public:
  EdgeLengthSolver(const Graph& g, std::vector<double> target, int dim)
      : edges_(g.edges()), target_(std::move(target)), n_(g.num_vertices()), dim_(dim) {}

  Eigen::VectorXd residuals(const Eigen::VectorXd& q) const {
    Eigen::VectorXd r(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [u, v] = edges_[e];
      r[e] = (q.segment(u * dim_, dim_) - q.segment(v * dim_, dim_)).squaredNorm() - target_[e];
    }
    return r;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& q) const {
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(edges_.size(), n_ * dim_);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [u, v] = edges_[e];
      const Eigen::VectorXd d = 2.0 * (q.segment(u * dim_, dim_) - q.segment(v * dim_, dim_));
      j.block(e, u * dim_, 1, dim_) = d.transpose();
      j.block(e, v * dim_, 1, dim_) = -d.transpose();
    }
    return j;
  }

  /// Minimum-norm Gauss-Newton steps q -= J^T (J J^T)^+ r. Moves q to a
  /// nearby exact solution instead of merely shrinking the residual.
  void project(Eigen::VectorXd& q, int iterations) const {
    if (edges_.empty()) return;
    for (int it = 0; it < iterations; ++it) {
      const Eigen::VectorXd r = residuals(q);
      const Eigen::MatrixXd j = jacobian(q);
      const Eigen::MatrixXd jjt = j * j.transpose();
      q -= j.transpose() * jjt.completeOrthogonalDecomposition().solve(r);
    }
  }

  /// Returns true once max |r| <= tol. Damping starts at lambda, halves on
  /// an accepted step and quadruples on a rejected one.
  bool solve(Eigen::VectorXd& q, double tol, int max_iterations, double lambda) const {
    if (edges_.empty()) return true;
    Eigen::VectorXd r = residuals(q);
    double cost = r.squaredNorm();
    for (int it = 0; it < max_iterations; ++it) {
      if (r.lpNorm<Eigen::Infinity>() <= tol) return true;
      const Eigen::MatrixXd j = jacobian(q);
      Eigen::MatrixXd normal = j.transpose() * j;
      normal.diagonal().array() += lambda;
      const Eigen::VectorXd step = normal.ldlt().solve(-j.transpose() * r);
      const Eigen::VectorXd candidate = q + step;
      const Eigen::VectorXd r_new = residuals(candidate);
      const double cost_new = r_new.squaredNorm();
      if (std::isfinite(cost_new) && cost_new < cost) {
        q = candidate;
        r = r_new;
        cost = cost_new;
        lambda *= 0.5;
      } else {
        lambda *= 4.0;
        if (lambda > 1e12) break;
      }
    }
    return r.lpNorm<Eigen::Infinity>() <= tol;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<double> target_;
  int n_;
  int dim_;
};

}  // namespace

std::optional<FlexResult> flex_search(const Framework& f, const FlexConfig& config) {
  if (f.dim() != 1) throw Error("flex search: framework must be 1-dimensional");
  const int n = f.graph.num_vertices();
  if (n < 2) return std::nullopt;

  std::vector<double> p(n);
  for (Vertex v = 0; v < n; ++v) p[v] = f.realization.value(v);
  const auto [lo, hi] = std::minmax_element(p.begin(), p.end());
  const double centre = (*lo + *hi) / 2.0;
  const double spread = *hi - *lo > 0.0 ? *hi - *lo : 1.0;
  std::vector<double> unit(n);
  for (Vertex v = 0; v < n; ++v) unit[v] = (p[v] - centre) / spread;

  std::vector<double> target;
  for (const auto& [u, v] : f.graph.edges()) target.push_back((unit[u] - unit[v]) * (unit[u] - unit[v]));
  // residual_tol is in original units; squared lengths scale with spread^2.
  const double tol = config.residual_tol / (spread * spread);

  int restarts_used = 0;
  for (int dim : config.dims) {
    if (dim < 1) throw Error("flex search: dimensions must be >= 1");
    EdgeLengthSolver solver(f.graph, target, dim);
    for (int restart = 0; restart < config.restarts; ++restart) {
      ++restarts_used;
      std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                        static_cast<std::uint32_t>(dim), static_cast<std::uint32_t>(restart)};
      std::mt19937_64 rng(seq);
      std::normal_distribution<double> noise(0.0, config.perturbation);
      Eigen::VectorXd q(n * dim);
      for (Vertex v = 0; v < n; ++v)
        for (int k = 0; k < dim; ++k) q[v * dim + k] = (k == 0 ? unit[v] : 0.0) + noise(rng);

      if (!solver.solve(q, tol, config.max_iterations, 1e-3)) continue;

      auto gap_of = [&](const Eigen::VectorXd& x) {
        double gap = 0.0;
        for (Vertex a = 0; a < n; ++a)
          for (Vertex b = a + 1; b < n; ++b) {
            const double d = (x.segment(a * dim, dim) - x.segment(b * dim, dim)).norm();
            gap = std::max(gap, std::abs(d - std::abs(unit[a] - unit[b])));
          }
        return gap;
      };
      if (gap_of(q) < config.accept_gap) continue;  // congruent, or too close to call

      // Polish, then project; a spurious candidate drifts back towards a
      // congruent copy and loses its gap.
      solver.solve(q, tol * 1e-3, 200, 1e-9);
      solver.project(q, 30);
      if (!std::isfinite(q.squaredNorm()) || gap_of(q) < config.accept_gap) continue;

      std::vector<double> flat(static_cast<std::size_t>(n) * dim);
      for (Vertex v = 0; v < n; ++v)
        for (int k = 0; k < dim; ++k) flat[v * dim + k] = q[v * dim + k] * spread + (k == 0 ? centre : 0.0);
      Witness w = make_witness(f, Realization::floating(dim, std::move(flat)));
      if (verify_witness(w).ok) return FlexResult{std::move(w), restarts_used, dim};
    }
  }
  return std::nullopt;
}

}  // namespace linerig

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

namespace mpirecon {

/// Reference norm of the stopping test |r| <= tolerance * reference.
enum class CgStopRule { right_hand_side, initial_residual };

struct CgReport {
  std::size_t iterations = 0;
  double relative_residual = 0.0;  // |r| / reference at exit
  bool converged = false;
  /// Residual norms |r_k|, k = 0..iterations.
  std::vector<double> residual_history;
};

/// Plain conjugate gradients for a symmetric positive (semi)definite operator
/// given as a callable `apply(const VectorXd& in, VectorXd& out)`.
///
/// Stops when |r| <= tolerance * reference or after max_iterations; `x`
/// holds the starting guess on entry and the iterate on exit.
template <typename Operator>
CgReport conjugate_gradient(const Operator& apply, const Eigen::VectorXd& b, Eigen::VectorXd& x,
                            double tolerance, std::size_t max_iterations,
                            CgStopRule rule = CgStopRule::right_hand_side) {
  CgReport report;
  if (b.norm() == 0.0 && rule == CgStopRule::right_hand_side) {
    x.setZero();
    report.converged = true;
    report.residual_history.push_back(0.0);
    return report;
  }

  Eigen::VectorXd r(b.size()), q(b.size());
  apply(x, q);
  r = b - q;
  Eigen::VectorXd p = r;
  double rr = r.squaredNorm();
  report.residual_history.push_back(std::sqrt(rr));

  const double reference = rule == CgStopRule::right_hand_side ? b.norm() : std::sqrt(rr);
  const double target = tolerance * reference;
  while (std::sqrt(rr) > target && report.iterations < max_iterations) {
    apply(p, q);
    const double pq = p.dot(q);
    if (!(pq > 0.0)) break;  // direction in the null space; no further progress
    const double alpha = rr / pq;
    x.noalias() += alpha * p;
    r.noalias() -= alpha * q;
    const double rr_new = r.squaredNorm();
    ++report.iterations;
    report.residual_history.push_back(std::sqrt(rr_new));
    p = r + (rr_new / rr) * p;
    rr = rr_new;
  }
  report.relative_residual = reference > 0.0 ? std::sqrt(rr) / reference : 0.0;
  report.converged = std::sqrt(rr) <= target;
  return report;
}

}  // namespace mpirecon

#pragma once

// Parameter-level refutation of a Neumaier graph with exactly four distinct
// eigenvalues k > theta_1 > theta > theta_2, where theta = s - e is the
// eigenvalue carried by a regular clique.

#include <cmath>
#include <string>

#include "neumaier/errors.hpp"

namespace neumaier {

struct FourEvRefutation {
  // inputs
  double k = 0, theta = 0, theta2 = 0, e = 0;
  // derived
  double s = 0;       // theta + e
  double v = 0;       // (s+1)(k-s+e)/e
  double lambda = 0;  // s-1 + (k-s)(e-1)/s
  double vertex_residual = 0;    // e v = (s+1)(k-s+e), relative
  double triangle_residual = 0;  // C(s+1,2)(lambda-(s-1)) = (v-s-1) C(e,2), relative
  double theta1 = 0;             // from the walk-count equation on the diagonal
  double theta1_closed = 0;      // -k/(e+theta)
  bool contradiction = false;    // theta1 <= 0, impossible for a second eigenvalue above theta >= 0
  std::string reason;
  bool integral_s = false, integral_v = false, integral_lambda = false;
};

namespace detail {
inline double rel_diff(double a, double b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}
inline bool near_integer(double x) { return std::abs(x - std::round(x)) <= 1e-9 * std::max(1.0, std::abs(x)); }
}  // namespace detail

/// Derives (s, v, lambda) from (k, theta, e), then solves the diagonal of
/// (A - theta1)(A - theta)(A - theta2) = c J for theta1. The solution always
/// equals -k/(e+theta) <= 0, so no such graph exists.
inline FourEvRefutation refute_four_eigenvalues(double k, double theta, double theta2, double e) {
  if (!(k > theta)) throw ArgumentError("precondition k > theta violated");
  if (!(theta >= 0)) throw ArgumentError("precondition theta >= 0 violated");
  if (!(theta2 < 0)) throw ArgumentError("precondition 0 > theta2 violated");
  if (!(e >= 1)) throw ArgumentError("precondition e >= 1 violated");
  if (!(e + theta > 0)) throw ArgumentError("precondition e + theta > 0 violated");
  if (!(theta2 < -k / (theta + e))) throw ArgumentError("precondition theta2 < -k/(theta+e) violated");

  FourEvRefutation r;
  r.k = k;
  r.theta = theta;
  r.theta2 = theta2;
  r.e = e;
  r.s = theta + e;
  const double s = r.s;
  r.v = (s + 1) * (k - theta) / e;
  r.lambda = s - 1 + (k - s) * (e - 1) / s;

  const double v = r.v, lambda = r.lambda;
  r.vertex_residual = detail::rel_diff(e * v, (s + 1) * (k - s + e));
  r.triangle_residual =
      detail::rel_diff((s + 1) * s / 2 * (lambda - (s - 1)), (v - s - 1) * e * (e - 1) / 2);

  // Diagonal entries: A^2_uu = k, A^3_uu = k lambda, and the constant of the
  // J-multiple is (k - theta1)(k - theta)(k - theta2)/v.
  const double p = (k - theta) * (k - theta2);
  const double num = p * k - v * (k * lambda - (theta + theta2) * k);
  const double den = p - v * (k + theta * theta2);
  r.theta1_closed = -k / (e + theta);
  if (den == 0) {
    r.theta1 = r.theta1_closed;
    r.reason = "diagonal equation degenerate; closed form used";
  } else {
    r.theta1 = num / den;
  }
  r.contradiction = r.theta1 <= 0;
  if (r.reason.empty())
    r.reason = r.contradiction ? "theta1 = -k/(e+theta) <= 0 cannot exceed theta >= 0"
                               : "no contradiction: theta1 > 0";
  r.integral_s = detail::near_integer(s);
  r.integral_v = detail::near_integer(v);
  r.integral_lambda = detail::near_integer(lambda);
  return r;
}

}  // namespace neumaier

#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace tpq {

/**
 * @brief Gauss-Hermite rule on (-inf, inf) with weight exp(-x*x),
 *        nodes and weights from the Golub-Welsch eigenproblem.
 *
 * Exact for polynomials of degree <= 2n-1 against the weight.
 */
struct GaussHermite {
  std::vector<double> x;
  std::vector<double> w;

  explicit GaussHermite(int n) {
    if (n < 1) throw std::invalid_argument("GaussHermite: need n >= 1 nodes");
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
      const double off = std::sqrt(0.5 * k);
      jacobi(k, k - 1) = off;
      jacobi(k - 1, k) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    if (es.info() != Eigen::Success)
      throw std::runtime_error("GaussHermite: eigensolver failed");
    x.resize(n);
    w.resize(n);
    const double mu0 = std::sqrt(M_PI);  // integral of the weight
    for (int i = 0; i < n; ++i) {
      x[i] = es.eigenvalues()(i);
      const double v0 = es.eigenvectors()(0, i);
      w[i] = mu0 * v0 * v0;
    }
  }

  int size() const { return static_cast<int>(x.size()); }
};

struct AdaptiveParams {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 15;  // Gauss-Kronrod recursion depth
};

/// Adaptive Gauss-Kronrod integration of f over [a,b]; throws if the
/// error estimate does not meet max(abs_tol, rel_tol*|value|).
inline double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                 const AdaptiveParams& ap) {
  if (!(ap.rel_tol > 0.0) || !(ap.abs_tol > 0.0))
    throw std::invalid_argument("integrate_adaptive: tolerances must be positive");
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, ap.max_subdivisions, ap.rel_tol, &error);
  const double budget = std::max(ap.abs_tol, ap.rel_tol * std::abs(value));
  // GK error estimates are conservative; a modest multiple still flags
  // genuine non-convergence.
  if (!(error <= 100.0 * budget) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "integrate_adaptive: failed to converge on [" << a << ", " << b
        << "]: value=" << value << " error_estimate=" << error << " budget=" << budget
        << " max_subdivisions=" << ap.max_subdivisions;
    throw std::runtime_error(msg.str());
  }
  return value;
}

}  // namespace tpq

#pragma once

// Numerical realization of the spectrum [0,1] of the squared difference
// of the two projections: compressed to the holomorphic subspace, the
// operator is unitarily equivalent to multiplication by 1 - mu(xi), so
// its spectrum is the closed range of 1 - mu. Two complementary probes:
//
//  * spectrum_range scans a radial table of 1 - mu and reports observed
//    extremes, a coverage histogram over [0,1], and the largest gap
//    between consecutive sampled values;
//
//  * finite_section compresses multiplication by 1 - mu(., rho0) onto
//    the first N Hermite functions of the s variable (Galerkin), whose
//    eigenvalues sit inside [0,1] and spread toward both ends as N
//    grows.
//
// Spectral values map back to spin classes via the identification of
// the spectral parameter with p.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "tpq/algebra.hpp"
#include "tpq/hermite.hpp"
#include "tpq/quadrature.hpp"
#include "tpq/radial_table.hpp"

namespace tpq::spectrum {

struct SpectrumReport {
  double observed_min = 0.0;
  double observed_max = 0.0;
  double max_gap = 0.0;                  // largest difference of consecutive sorted samples
  std::vector<long> coverage_histogram;  // bin counts of 1 - mu samples over [0,1]
};

inline constexpr int kHistogramBins = 64;

/// Scans the table's stored 1 - mu values (the cancellation-free branch,
/// so values near 0 keep full relative accuracy). Requires the table to
/// span s in [-10, 10] so both Gaussian-tail limits are reached.
inline SpectrumReport spectrum_range(const cone::RadialTable& table) {
  if (table.s_min() > -10.0 || table.s_max() < 10.0)
    throw std::invalid_argument("spectrum_range: table must span s in [-10, 10]");

  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(table.omm_values.size()));
  for (Eigen::Index i = 0; i < table.omm_values.rows(); ++i)
    for (Eigen::Index j = 0; j < table.omm_values.cols(); ++j)
      values.push_back(table.omm_values(i, j));

  std::sort(values.begin(), values.end());
  SpectrumReport rep;
  rep.observed_min = values.front();
  rep.observed_max = values.back();
  rep.coverage_histogram.assign(kHistogramBins, 0);
  for (double v : values) {
    const int bin = std::min(kHistogramBins - 1, static_cast<int>(v * kHistogramBins));
    ++rep.coverage_histogram[static_cast<std::size_t>(bin)];
  }
  for (std::size_t i = 1; i < values.size(); ++i)
    rep.max_gap = std::max(rep.max_gap, values[i] - values[i - 1]);
  return rep;
}

struct FiniteSection {
  int size = 0;
  double rho0 = 0.0;
  Eigen::MatrixXd matrix;       // <h_j, (1 - mu(., rho0)) h_k>
  Eigen::VectorXd eigenvalues;  // ascending
};

/// Galerkin compression onto the first N Hermite functions. The Gauss-
/// Hermite rule integrates h_j(x) h_k(x) f(x) as [w e^{x^2}] * (h_j h_k
/// e^{-x^2} carried inside the functions) * f; with K >= N nodes the
/// Gram part is exact, and the default K = 2N + 33 leaves generous
/// headroom for the smooth factor. 1 - mu is evaluated directly at the
/// nodes (an interpolated table cannot deliver the 1e-8 eigenvalue
/// bound); the table argument supplies the cone configuration.
inline FiniteSection finite_section(int N, double rho0, const cone::RadialTable& table,
                                    int quad_nodes = 0) {
  if (N < 2) throw std::domain_error("finite_section: N must be >= 2");
  if (!(rho0 >= 0.0)) throw std::domain_error("finite_section: rho0 must be >= 0");
  const int K = quad_nodes > 0 ? quad_nodes : 2 * N + 33;
  if (K < N + 1)
    throw std::invalid_argument("finite_section: quadrature under-resolved (need > N nodes)");

  const GaussHermite gh(K);

  cone::QuadParams qp;  // tight defaults; direct evaluation at the nodes
  Eigen::MatrixXd H(N, K);
  Eigen::VectorXd wf(K);
  for (int i = 0; i < K; ++i) {
    const double x = gh.x[static_cast<std::size_t>(i)];
    // The Galerkin entries need the exponentially reweighted Gauss
    // weight w_i e^{x^2}, which by the Christoffel identity equals
    // 1 / sum_{k<K} h_k(x_i)^2 over the orthonormal Hermite functions.
    // Evaluating it this way avoids both e^{x^2} overflow and the
    // rounding-noise floor of eigenvector-derived weights at the
    // outermost nodes.
    const auto h = hermite_functions(K, x);
    for (int j = 0; j < N; ++j) H(j, i) = h[static_cast<std::size_t>(j)];
    double christoffel_sum = 0.0;
    for (int k = 0; k < K; ++k) {
      const double hk = h[static_cast<std::size_t>(k)];
      christoffel_sum += hk * hk;
    }
    const double omm =
        std::min(cone::one_minus_mu_reduced(x, rho0, table.config, qp), 1.0);
    wf(i) = omm / christoffel_sum;
  }

  FiniteSection fs;
  fs.size = N;
  fs.rho0 = rho0;
  fs.matrix = H * wf.asDiagonal() * H.transpose();
  fs.matrix = 0.5 * (fs.matrix + fs.matrix.transpose().eval());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(fs.matrix);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("finite_section: eigensolver failed");
  fs.eigenvalues = es.eigenvalues();
  return fs;
}

/// Spectral value -> spin class, identifying the value with p.
inline algebra::SpinClass spin_from_spectral_value(double v) {
  if (!(v >= 0.0) || !(v <= 1.0))
    throw std::domain_error("spin_from_spectral_value: value must lie in [0,1]");
  return algebra::classify_spin(algebra::SpinParameter(v));
}

}  // namespace tpq::spectrum

#pragma once

// Precomputed (s, rho) table of the smeared cone quantities with smooth
// interpolation, exploiting rotation invariance: s = xi_0, rho = |vec xi|.
//
// lambda and mu span dozens of orders of magnitude across a [-10,10]
// table (both have Gaussian-type decay on one side), so interpolation
// runs on the logarithms: Catmull-Rom bicubic in log-space on interior
// cells, bilinear in log-space on edge cells, and exact passthrough on
// node hits. Grids must be uniformly spaced.
//
// mu saturates to 1.0 in double precision deep inside the cone (the
// true 1 - mu falls below 1e-21 already at s = 10, rho = 0), so the
// table stores both mu and 1 - mu, each computed from its own
// cancellation-free integral. The strict bound 0 < mu < 1 is validated
// as strict positivity of both stored fields; the saturated field is
// then exactly 1.0 or 0.0 only as a rounding artifact, never used where
// its small complement is needed.

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tpq/cone.hpp"

namespace tpq::cone {

struct RadialTable {
  std::vector<double> s_grid;    // strictly increasing, uniform
  std::vector<double> rho_grid;  // strictly increasing, uniform, rho >= 0
  Eigen::MatrixXd lambda_values;  // (s index, rho index)
  Eigen::MatrixXd mu_values;
  Eigen::MatrixXd omm_values;  // 1 - mu, from its own integral
  ConeConfig config;

  double s_min() const { return s_grid.front(); }
  double s_max() const { return s_grid.back(); }
  double rho_min() const { return rho_grid.front(); }
  double rho_max() const { return rho_grid.back(); }

  bool contains(double s, double rho) const {
    return s >= s_min() && s <= s_max() && rho >= rho_min() && rho <= rho_max();
  }
};

namespace detail {

inline double uniform_spacing(const std::vector<double>& grid, const char* name) {
  if (grid.size() < 2) throw std::domain_error(std::string(name) + ": need at least 2 points");
  const double h = grid[1] - grid[0];
  if (!(h > 0.0)) throw std::domain_error(std::string(name) + ": must be strictly increasing");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double step = grid[i] - grid[i - 1];
    if (!(step > 0.0) || std::abs(step - h) > 1e-9 * std::max(1.0, std::abs(h)))
      throw std::domain_error(std::string(name) + ": must be uniformly spaced");
  }
  return h;
}

/// Catmull-Rom weights for the four stencil points around local
/// coordinate u in [0,1].
inline std::array<double, 4> catmull_rom(double u) {
  const double u2 = u * u, u3 = u2 * u;
  return {-0.5 * u3 + u2 - 0.5 * u, 1.5 * u3 - 2.5 * u2 + 1.0, -1.5 * u3 + 2.0 * u2 + 0.5 * u,
          0.5 * u3 - 0.5 * u2};
}

/// Shared bicubic/bilinear log-space interpolation over one field.
inline double interp_log_field(const RadialTable& t, const Eigen::MatrixXd& field, double s,
                               double rho) {
  if (!t.contains(s, rho))
    throw std::domain_error("RadialTable: query (" + std::to_string(s) + ", " +
                            std::to_string(rho) + ") outside table hull");
  const auto ns = static_cast<Eigen::Index>(t.s_grid.size());
  const auto nr = static_cast<Eigen::Index>(t.rho_grid.size());
  const double hs = t.s_grid[1] - t.s_grid[0];
  const double hr = t.rho_grid[1] - t.rho_grid[0];
  const double fi = (s - t.s_grid.front()) / hs;
  const double fj = (rho - t.rho_grid.front()) / hr;

  // Node hits return the stored value bitwise.
  const double ri = std::round(fi), rj = std::round(fj);
  if (std::abs(fi - ri) < 1e-12 && std::abs(fj - rj) < 1e-12) {
    const auto i = static_cast<Eigen::Index>(ri), j = static_cast<Eigen::Index>(rj);
    if (i >= 0 && i < ns && j >= 0 && j < nr) return field(i, j);
  }

  auto i = static_cast<Eigen::Index>(std::floor(fi));
  auto j = static_cast<Eigen::Index>(std::floor(fj));
  double u = fi - static_cast<double>(i);
  double v = fj - static_cast<double>(j);

  if (i < 1 || i > ns - 3 || j < 1 || j > nr - 3) {
    // Bilinear on edge cells (not enough stencil for the cubic).
    i = std::min(std::max(i, Eigen::Index(0)), ns - 2);
    j = std::min(std::max(j, Eigen::Index(0)), nr - 2);
    u = fi - static_cast<double>(i);
    v = fj - static_cast<double>(j);
    const double val = std::log(field(i, j)) * (1.0 - u) * (1.0 - v) +
                       std::log(field(i + 1, j)) * u * (1.0 - v) +
                       std::log(field(i, j + 1)) * (1.0 - u) * v +
                       std::log(field(i + 1, j + 1)) * u * v;
    return std::exp(val);
  }

  const auto wu = catmull_rom(u);
  const auto wv = catmull_rom(v);
  double acc = 0.0;
  for (int a = 0; a < 4; ++a) {
    double row = 0.0;
    for (int b = 0; b < 4; ++b)
      row += wv[static_cast<std::size_t>(b)] * std::log(field(i - 1 + a, j - 1 + b));
    acc += wu[static_cast<std::size_t>(a)] * row;
  }
  return std::exp(acc);
}

}  // namespace detail

/// Evaluates lambda, mu and 1-mu on the grid product. All three fields
/// must come out finite and strictly positive (this is the numerically
/// representable form of lambda > 0 and 0 < mu < 1).
inline RadialTable build_radial_table(const std::vector<double>& s_grid,
                                      const std::vector<double>& rho_grid, const ConeConfig& cfg,
                                      const QuadParams& qp) {
  validate_config(cfg);
  detail::uniform_spacing(s_grid, "RadialTable s_grid");
  detail::uniform_spacing(rho_grid, "RadialTable rho_grid");
  if (rho_grid.front() < 0.0) throw std::domain_error("RadialTable: rho_grid must be >= 0");

  RadialTable t;
  t.s_grid = s_grid;
  t.rho_grid = rho_grid;
  t.config = cfg;
  const auto ns = static_cast<Eigen::Index>(s_grid.size());
  const auto nr = static_cast<Eigen::Index>(rho_grid.size());
  t.lambda_values.resize(ns, nr);
  t.mu_values.resize(ns, nr);
  t.omm_values.resize(ns, nr);

  for (Eigen::Index i = 0; i < ns; ++i) {
    const double s = s_grid[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < nr; ++j) {
      const double rho = rho_grid[static_cast<std::size_t>(j)];
      const double lam = lambda_reduced(s, rho, cfg, qp);
      const double mu = mu_reduced(s, rho, cfg, qp);
      const double omm = one_minus_mu_reduced(s, rho, cfg, qp);
      if (!std::isfinite(lam) || !(lam > 0.0))
        throw std::runtime_error("RadialTable: lambda not strictly positive at grid point");
      if (!std::isfinite(mu) || !(mu > 0.0) || !std::isfinite(omm) || !(omm > 0.0))
        throw std::runtime_error("RadialTable: mu outside (0,1) at grid point");
      t.lambda_values(i, j) = lam;
      // Where one branch saturates, quadrature rounding can land a few
      // ulps above 1; store the saturated bound instead, since the
      // underlying quantity never exceeds it.
      t.mu_values(i, j) = std::min(mu, 1.0);
      t.omm_values(i, j) = std::min(omm, 1.0);
    }
  }
  return t;
}

inline double interpolate_lambda(const RadialTable& t, double s, double rho) {
  return detail::interp_log_field(t, t.lambda_values, s, rho);
}

inline double interpolate_mu(const RadialTable& t, double s, double rho) {
  return detail::interp_log_field(t, t.mu_values, s, rho);
}

/// Well-conditioned access to 1 - mu (use instead of 1 - interpolate_mu
/// wherever mu is close to 1).
inline double interpolate_one_minus_mu(const RadialTable& t, double s, double rho) {
  return detail::interp_log_field(t, t.omm_values, s, rho);
}

/// Uniform grid helper: count points from min to max inclusive.
inline std::vector<double> linspace(double min, double max, int count) {
  if (count < 2) throw std::domain_error("linspace: need at least 2 points");
  if (!(max > min)) throw std::domain_error("linspace: max must exceed min");
  std::vector<double> g(static_cast<std::size_t>(count));
  const double h = (max - min) / (count - 1);
  for (int i = 0; i < count; ++i) g[static_cast<std::size_t>(i)] = min + h * i;
  g.back() = max;
  return g;
}

}  // namespace tpq::cone

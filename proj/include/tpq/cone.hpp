#pragma once

// The smeared cone symbol: the causal indicator chi of the forward (or
// backward) light cone, the Minkowski quadratic form q, the Gaussian-
// smeared Hamiltonian symbol
//
//   lambda(xi) = (1 / (4 m c pi^2)) * Int_V q(y) exp(-|y - xi|^2) d^4 y,
//
// the smeared indicator
//
//   mu(xi) = pi^{-2} * Int_V exp(-|y - xi|^2) d^4 y,
//
// their closed-form radial reductions to fast 1D quadratures, the
// deep-cone asymptotic chi(xi) q(xi) / (4 m c), and two independent
// brute-force oracles (tensor Gauss-Hermite and seeded Monte Carlo)
// for cross-validation.
//
// Both lambda and mu depend on xi only through (s, rho) = (xi_0, |vec xi|):
// with the spatial angular integral done analytically,
//
//   Int_{S^2} exp(2 r rho cos theta) dOmega = 4 pi sinh(2 r rho)/(2 r rho),
//
// and the y_0 integral in closed form via Gaussian moments and erfc,
// one adaptive radial integral in r remains.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tpq/quadrature.hpp"

namespace tpq::cone {

struct FourMomentum {
  std::array<double, 4> xi{};  // (xi_0, xi_1, xi_2, xi_3)

  double time() const { return xi[0]; }
  double spatial_norm() const {
    return std::sqrt(xi[1] * xi[1] + xi[2] * xi[2] + xi[3] * xi[3]);
  }
};

enum class Orientation { Future, Past };

struct ConeConfig {
  double m = 1.0;     // mass
  double c = 1.0;     // speed constant
  double hbar = 1.0;  // action constant
  Orientation orientation = Orientation::Future;
};

inline void validate_config(const ConeConfig& cfg) {
  if (!(cfg.m > 0.0) || !(cfg.c > 0.0) || !(cfg.hbar > 0.0))
    throw std::domain_error("ConeConfig: m, c, hbar must be strictly positive");
}

struct QuadParams {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double r_cutoff = 0.0;  // <= 0: automatic |s| + rho + 10
  int max_subdivisions = 15;
};

/// Indicator of the oriented light cone: 1 on c*xi_0 >= |vec xi| for
/// Future, 1 on c*xi_0 <= -|vec xi| for Past; boundary points count in.
inline double chi_cone(const FourMomentum& xi, const ConeConfig& cfg) {
  validate_config(cfg);
  const double rho = xi.spatial_norm();
  if (cfg.orientation == Orientation::Future) return cfg.c * xi.time() >= rho ? 1.0 : 0.0;
  return cfg.c * xi.time() <= -rho ? 1.0 : 0.0;
}

/// Minkowski form q(xi) = xi_0^2 - xi_1^2 - xi_2^2 - xi_3^2.
inline double minkowski_q(const FourMomentum& xi) {
  return xi.xi[0] * xi.xi[0] - xi.xi[1] * xi.xi[1] - xi.xi[2] * xi.xi[2] - xi.xi[3] * xi.xi[3];
}

namespace detail {

/// Angular factor W(r, rho) = exp(-(r^2 + rho^2)) sinh(2 r rho)/(2 r rho),
/// evaluated cancellation-free as (exp(-(r-rho)^2) - exp(-(r+rho)^2))/(4 r rho)
/// away from u = 2 r rho ~ 0, and by the Taylor series of sinh(u)/u below.
inline double angular_w(double r, double rho) {
  const double u = 2.0 * r * rho;
  if (u < 1e-4) {
    const double u2 = u * u;
    return std::exp(-(r * r + rho * rho)) * (1.0 + u2 / 6.0 + u2 * u2 / 120.0);
  }
  const double dm = r - rho;
  const double dp = r + rho;
  return (std::exp(-dm * dm) - std::exp(-dp * dp)) / (2.0 * u);
}

/// Closed-form y_0 moment for lambda:
///   Int_{r/c}^{inf} (y_0^2 - r^2) exp(-(y_0 - s)^2) dy_0
///     = exp(-b^2) (b/2 + s) + (sqrt(pi)/2) erfc(b) (s^2 + 1/2 - r^2),
/// with b = r/c - s.
inline double g_moment(double r, double s, double c) {
  const double b = r / c - s;
  return std::exp(-b * b) * (0.5 * b + s) +
         0.5 * std::sqrt(M_PI) * std::erfc(b) * (s * s + 0.5 - r * r);
}

inline double resolve_cutoff(double s, double rho, const QuadParams& qp) {
  const double auto_cutoff = std::abs(s) + rho + 10.0;
  if (qp.r_cutoff <= 0.0) return auto_cutoff;
  const double needed = std::sqrt(s * s + rho * rho) + 8.0;
  if (qp.r_cutoff < needed)
    throw std::invalid_argument("QuadParams: r_cutoff " + std::to_string(qp.r_cutoff) +
                                " below the Gaussian tail bound " + std::to_string(needed) +
                                " for this point");
  return qp.r_cutoff;
}

inline void validate_point(double rho, const QuadParams& qp) {
  if (!(rho >= 0.0)) throw std::domain_error("reduced evaluation: rho must be >= 0");
  if (!(qp.rel_tol > 0.0) || !(qp.abs_tol > 0.0))
    throw std::invalid_argument("QuadParams: tolerances must be positive");
}

/// Past orientation is the exact reflection s -> -s of the Future
/// integrals; fold it in at entry so one code path serves both.
inline double oriented_s(double s, const ConeConfig& cfg) {
  return cfg.orientation == Orientation::Future ? s : -s;
}

}  // namespace detail

/// lambda at xi = (s, rho, 0, 0):
///   (1 / (m c pi)) Int_0^inf r^2 W(r, rho) G(r; s) dr,  strictly positive.
inline double lambda_reduced(double s, double rho, const ConeConfig& cfg, const QuadParams& qp) {
  validate_config(cfg);
  detail::validate_point(rho, qp);
  const double se = detail::oriented_s(s, cfg);
  const double cutoff = detail::resolve_cutoff(se, rho, qp);
  const AdaptiveParams ap{qp.rel_tol, qp.abs_tol, qp.max_subdivisions};
  const double c = cfg.c;
  const double integral = integrate_adaptive(
      [se, rho, c](double r) {
        return r * r * detail::angular_w(r, rho) * detail::g_moment(r, se, c);
      },
      0.0, cutoff, ap);
  return integral / (cfg.m * cfg.c * M_PI);
}

/// Smeared cone indicator at xi = (s, rho, 0, 0):
///   (2 / sqrt(pi)) Int_0^inf r^2 W(r, rho) erfc(r/c - s) dr,  in (0, 1).
/// Cancellation-free for mu < 1/2; use one_minus_mu_reduced near 1.
inline double mu_reduced(double s, double rho, const ConeConfig& cfg, const QuadParams& qp) {
  validate_config(cfg);
  detail::validate_point(rho, qp);
  const double se = detail::oriented_s(s, cfg);
  const double cutoff = detail::resolve_cutoff(se, rho, qp);
  const AdaptiveParams ap{qp.rel_tol, qp.abs_tol, qp.max_subdivisions};
  const double c = cfg.c;
  const double integral = integrate_adaptive(
      [se, rho, c](double r) {
        return r * r * detail::angular_w(r, rho) * std::erfc(r / c - se);
      },
      0.0, cutoff, ap);
  return 2.0 / std::sqrt(M_PI) * integral;
}

/// 1 - mu via its own positive integral (erfc(s - r/c) in place of
/// erfc(r/c - s)), so values near machine-zero keep full relative
/// accuracy where forming 1 - mu in doubles would round to 0.
inline double one_minus_mu_reduced(double s, double rho, const ConeConfig& cfg,
                                   const QuadParams& qp) {
  validate_config(cfg);
  detail::validate_point(rho, qp);
  const double se = detail::oriented_s(s, cfg);
  const double cutoff = detail::resolve_cutoff(se, rho, qp);
  const AdaptiveParams ap{qp.rel_tol, qp.abs_tol, qp.max_subdivisions};
  const double c = cfg.c;
  const double integral = integrate_adaptive(
      [se, rho, c](double r) {
        return r * r * detail::angular_w(r, rho) * std::erfc(se - r / c);
      },
      0.0, cutoff, ap);
  return 2.0 / std::sqrt(M_PI) * integral;
}

/// Full 4-momentum entry point: reduces to (s, rho) = (xi_0, |vec xi|).
inline double lambda(const FourMomentum& xi, const ConeConfig& cfg, const QuadParams& qp) {
  return lambda_reduced(xi.time(), xi.spatial_norm(), cfg, qp);
}

inline double mu(const FourMomentum& xi, const ConeConfig& cfg, const QuadParams& qp) {
  return mu_reduced(xi.time(), xi.spatial_norm(), cfg, qp);
}

/// Leading deep-cone term chi(xi) q(xi) / (4 m c).
inline double lambda_asymptotic(const FourMomentum& xi, const ConeConfig& cfg) {
  validate_config(cfg);
  return chi_cone(xi, cfg) * minkowski_q(xi) / (4.0 * cfg.m * cfg.c);
}

struct AsymptoticRow {
  double t;
  double scaled_lambda;  // lambda(t*xi) / t^2
  double leading;        // chi(xi) q(xi) / (4 m c)
  double ratio;          // scaled_lambda / leading
};

/// Convergence table for t^{-2} lambda(t xi) -> chi(xi) q(xi)/(4 m c).
/// Requires xi strictly inside the oriented cone (chi = 1 and q > 0).
inline std::vector<AsymptoticRow> asymptotic_convergence(const FourMomentum& xi,
                                                         const std::vector<double>& t_list,
                                                         const ConeConfig& cfg,
                                                         const QuadParams& qp) {
  validate_config(cfg);
  const double q = minkowski_q(xi);
  if (chi_cone(xi, cfg) != 1.0 || !(q > 0.0))
    throw std::domain_error(
        "asymptotic_convergence: xi must lie strictly inside the oriented cone "
        "(leading term vanishes otherwise)");
  if (t_list.empty()) throw std::domain_error("asymptotic_convergence: empty t list");
  for (std::size_t i = 0; i < t_list.size(); ++i) {
    if (!(t_list[i] > 0.0) || (i > 0 && !(t_list[i] > t_list[i - 1])))
      throw std::domain_error("asymptotic_convergence: t values must be positive, increasing");
  }
  const double leading = lambda_asymptotic(xi, cfg);
  std::vector<AsymptoticRow> rows;
  rows.reserve(t_list.size());
  for (double t : t_list) {
    const FourMomentum scaled{{t * xi.xi[0], t * xi.xi[1], t * xi.xi[2], t * xi.xi[3]}};
    const double sl = lambda(scaled, cfg, qp) / (t * t);
    rows.push_back({t, sl, leading, sl / leading});
  }
  return rows;
}

struct OracleResult {
  double value;
  double error_estimate;        // standard error (Monte Carlo); 0 for tensor rule
  std::size_t cone_hits = 0;    // Monte Carlo samples landing inside the cone
};

struct MonteCarlo {
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

struct TensorGrid {
  int nodes = 32;
};

using OracleMethod = std::variant<MonteCarlo, TensorGrid>;

/// Brute-force 4D evaluation of
///   (1/(4 m c pi^2)) Int chi_V(xi + x) q(xi + x) exp(-|x|^2) d^4 x,
/// independent of the radial reduction. Monte Carlo draws
/// x ~ N(0, I/2)^4 (density pi^{-2} exp(-|x|^2)) and averages
/// chi * q / (4 m c) with a standard-error estimate; TensorGrid applies
/// a tensor Gauss-Hermite rule over the four axes.
inline OracleResult lambda_oracle(const FourMomentum& xi, const ConeConfig& cfg,
                                  const OracleMethod& method) {
  validate_config(cfg);
  const double prefactor = 1.0 / (4.0 * cfg.m * cfg.c);

  if (std::holds_alternative<MonteCarlo>(method)) {
    const auto& mc = std::get<MonteCarlo>(method);
    if (mc.samples < 100'000)
      throw std::invalid_argument("lambda_oracle: MonteCarlo needs >= 1e5 samples");
    std::mt19937_64 rng(mc.seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    double sum = 0.0, sum_sq = 0.0;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < mc.samples; ++i) {
      FourMomentum y;
      for (int a = 0; a < 4; ++a) y.xi[static_cast<std::size_t>(a)] = xi.xi[static_cast<std::size_t>(a)] + gauss(rng);
      const double chi = chi_cone(y, cfg);
      if (chi != 0.0) ++hits;
      const double f = chi * minkowski_q(y) * prefactor;
      sum += f;
      sum_sq += f * f;
    }
    const double n = static_cast<double>(mc.samples);
    const double mean = sum / n;
    const double variance = std::max(0.0, sum_sq / n - mean * mean) * n / (n - 1.0);
    return {mean, std::sqrt(variance / n), hits};
  }

  const auto& tg = std::get<TensorGrid>(method);
  if (tg.nodes < 24) throw std::invalid_argument("lambda_oracle: TensorGrid needs >= 24 nodes");
  const GaussHermite gh(tg.nodes);
  const int N = tg.nodes;
  double acc = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) {
        const double w_ijk = gh.w[static_cast<std::size_t>(i)] * gh.w[static_cast<std::size_t>(j)] * gh.w[static_cast<std::size_t>(k)];
        FourMomentum y;
        y.xi[0] = xi.xi[0] + gh.x[static_cast<std::size_t>(i)];
        y.xi[1] = xi.xi[1] + gh.x[static_cast<std::size_t>(j)];
        y.xi[2] = xi.xi[2] + gh.x[static_cast<std::size_t>(k)];
        for (int l = 0; l < N; ++l) {
          y.xi[3] = xi.xi[3] + gh.x[static_cast<std::size_t>(l)];
          acc += w_ijk * gh.w[static_cast<std::size_t>(l)] * chi_cone(y, cfg) * minkowski_q(y);
        }
      }
  return {acc * prefactor / (M_PI * M_PI), 0.0};
}

/// Hyperbolic rotation of rapidity eta in the (xi_0, xi_1) plane.
inline FourMomentum boost_xi(const FourMomentum& xi, double eta) {
  const double ch = std::cosh(eta), sh = std::sinh(eta);
  return {{ch * xi.xi[0] + sh * xi.xi[1], sh * xi.xi[0] + ch * xi.xi[1], xi.xi[2], xi.xi[3]}};
}

/// Diagnostic only: |lambda(boost(xi)) - lambda(xi)| / lambda(xi).
/// The Gaussian smearing kernel is rotation- but not boost-invariant,
/// so no bound is asserted; callers report the number.
inline double lorentz_deviation(const FourMomentum& xi, double rapidity, const ConeConfig& cfg,
                                const QuadParams& qp) {
  const double base = lambda(xi, cfg, qp);
  const double boosted = lambda(boost_xi(xi, rapidity), cfg, qp);
  return std::abs(boosted - base) / base;
}

}  // namespace tpq::cone

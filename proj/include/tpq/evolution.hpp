#pragma once

// Free wavepacket evolution in the momentum representation: the state
// phi lives on a uniform centered grid over (xi_0, xi_1) (reduced 2D
// mode) or all four momentum components, evolves by the unimodular
// multiplier exp(-i lambda(xi) tau / hbar), and transforms to the
// coordinate representation by a unitary centered discrete Fourier
// transform with the e^{+i x.xi} sign convention (so a narrow packet's
// centroid moves with velocity +grad lambda / hbar).
//
// The comparison symbol is the leading deep-cone term
// chi(xi) q(xi) / (4 m c); a flag drops the cone indicator to recover
// the pure quadratic-form generator.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "tpq/cone.hpp"
#include "tpq/radial_table.hpp"

namespace tpq::evolution {

using Complex = std::complex<double>;

struct AxisExtent {
  double min;
  double max;
};

struct GridSpec {
  int dims = 2;  // 2: (xi_0, xi_1); 4: full momentum space
  std::vector<int> points;        // per axis, powers of two
  std::vector<AxisExtent> extents;  // per axis, symmetric about 0

  double step(int axis) const {
    const auto a = static_cast<std::size_t>(axis);
    return (extents[a].max - extents[a].min) / points[a];
  }
  /// Node coordinate: min + k*step; index N/2 sits exactly at 0.
  double coord(int axis, int k) const {
    const auto a = static_cast<std::size_t>(axis);
    return extents[a].min + step(axis) * k;
  }
  double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dims; ++a) v *= step(a);
    return v;
  }
  std::size_t total_points() const {
    std::size_t t = 1;
    for (int a = 0; a < dims; ++a) t *= static_cast<std::size_t>(points[static_cast<std::size_t>(a)]);
    return t;
  }
};

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline void validate_grid(const GridSpec& g) {
  if (g.dims != 2 && g.dims != 4) throw std::domain_error("GridSpec: dims must be 2 or 4");
  if (g.points.size() != static_cast<std::size_t>(g.dims) ||
      g.extents.size() != static_cast<std::size_t>(g.dims))
    throw std::domain_error("GridSpec: points/extents must have one entry per axis");
  for (int a = 0; a < g.dims; ++a) {
    const auto i = static_cast<std::size_t>(a);
    if (!is_power_of_two(g.points[i]) || g.points[i] < 4)
      throw std::domain_error("GridSpec: points per axis must be a power of two >= 4");
    if (g.dims == 4 && g.points[i] > 64)
      throw std::domain_error("GridSpec: 4D mode is capped at 64 points per axis");
    const auto& e = g.extents[i];
    if (!(e.max > 0.0) || std::abs(e.max + e.min) > 1e-12 * e.max)
      throw std::domain_error("GridSpec: extents must be symmetric about 0");
  }
}

struct WavePacket {
  GridSpec grid;
  std::vector<Complex> amplitudes;  // row-major over axes
};

/// Coordinate-representation samples on the dual centered grid
/// x_k = (k - N/2) * 2 pi / (N * step).
struct PositionField {
  GridSpec grid;  // the originating momentum grid
  std::vector<Complex> values;

  double dual_step(int axis) const { return 2.0 * M_PI / (grid.points[static_cast<std::size_t>(axis)] * grid.step(axis)); }
  double dual_coord(int axis, int k) const {
    return (k - grid.points[static_cast<std::size_t>(axis)] / 2) * dual_step(axis);
  }
  double dual_cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < grid.dims; ++a) v *= dual_step(a);
    return v;
  }
};

inline double packet_norm(const WavePacket& p) {
  double s = 0.0;
  for (const auto& z : p.amplitudes) s += std::norm(z);
  return std::sqrt(s * p.grid.cell_volume());
}

namespace detail {

/// Walks the flat row-major index space, exposing per-axis indices.
struct IndexWalker {
  const GridSpec& grid;
  std::vector<int> idx;

  explicit IndexWalker(const GridSpec& g) : grid(g), idx(static_cast<std::size_t>(g.dims), 0) {}
  bool advance() {
    for (int a = grid.dims - 1; a >= 0; --a) {
      const auto i = static_cast<std::size_t>(a);
      if (++idx[i] < grid.points[i]) return true;
      idx[i] = 0;
    }
    return false;
  }
};

/// Half-swap along every axis (fftshift == ifftshift for even sizes).
inline std::vector<Complex> centered_shift(const std::vector<Complex>& in, const GridSpec& g) {
  std::vector<Complex> out(in.size());
  IndexWalker w(g);
  std::size_t flat = 0;
  do {
    std::size_t shifted = 0;
    for (int a = 0; a < g.dims; ++a) {
      const auto i = static_cast<std::size_t>(a);
      const int n = g.points[i];
      shifted = shifted * static_cast<std::size_t>(n) +
                static_cast<std::size_t>((w.idx[i] + n / 2) % n);
    }
    out[shifted] = in[flat];
    ++flat;
  } while (w.advance());
  return out;
}

enum class Direction { Forward, Inverse };  // Forward: e^{-i}; Inverse: e^{+i}, unscaled

/// In-place multi-dimensional FFT, one axis at a time. The inverse
/// direction leaves out all 1/N factors; callers apply the unitary
/// scale themselves.
inline void fft_all_axes(std::vector<Complex>& data, const GridSpec& g, Direction dir) {
  Eigen::FFT<double> fft;
  for (int axis = 0; axis < g.dims; ++axis) {
    const auto ax = static_cast<std::size_t>(axis);
    const int n = g.points[ax];
    // stride of this axis and number of lines
    std::size_t stride = 1;
    for (int a = axis + 1; a < g.dims; ++a) stride *= static_cast<std::size_t>(g.points[static_cast<std::size_t>(a)]);
    const std::size_t total = data.size();
    std::vector<Complex> line(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
    const std::size_t block = stride * static_cast<std::size_t>(n);
    for (std::size_t base = 0; base < total; base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (int k = 0; k < n; ++k) line[static_cast<std::size_t>(k)] = data[base + off + static_cast<std::size_t>(k) * stride];
        if (dir == Direction::Forward) {
          fft.fwd(out, line);
        } else {
          fft.inv(out, line);
          for (auto& z : out) z *= static_cast<double>(n);  // undo the 1/n
        }
        for (int k = 0; k < n; ++k) data[base + off + static_cast<std::size_t>(k) * stride] = out[static_cast<std::size_t>(k)];
      }
    }
  }
}

}  // namespace detail

/// Normalized Gaussian profile exp(-(xi - center)^2 / (4 sigma^2)) per
/// axis (so |amplitude|^2 has standard deviation sigma). Rejects widths
/// under 4 grid cells and profiles whose analytic out-of-box tail mass
/// exceeds 1e-6.
inline WavePacket make_gaussian_packet(const GridSpec& grid, const cone::FourMomentum& center,
                                       const std::vector<double>& widths) {
  validate_grid(grid);
  if (widths.size() != static_cast<std::size_t>(grid.dims))
    throw std::domain_error("make_gaussian_packet: one width per axis required");
  for (int a = grid.dims; a < 4; ++a)
    if (center.xi[static_cast<std::size_t>(a)] != 0.0)
      throw std::domain_error(
          "make_gaussian_packet: center components beyond the grid dims must be 0");
  double tail_mass = 0.0;
  for (int a = 0; a < grid.dims; ++a) {
    const auto i = static_cast<std::size_t>(a);
    const double c = center.xi[i];
    const auto& e = grid.extents[i];
    if (!(c > e.min) || !(c < e.max))
      throw std::domain_error("make_gaussian_packet: center outside grid extents");
    const double sigma = widths[i];
    if (!(sigma > 0.0) || sigma < 4.0 * grid.step(a))
      throw std::invalid_argument(
          "make_gaussian_packet: width must be positive and at least 4 grid cells");
    // |amp|^2 is N(c, sigma^2) along this axis.
    tail_mass += 0.5 * (std::erfc((e.max - c) / (sigma * std::sqrt(2.0))) +
                        std::erfc((c - e.min) / (sigma * std::sqrt(2.0))));
  }
  if (tail_mass > 1e-6)
    throw std::invalid_argument(
        "make_gaussian_packet: profile truncated by the box (analytic tail mass " +
        std::to_string(tail_mass) + " > 1e-6); enlarge extents or narrow the packet");

  WavePacket p{grid, std::vector<Complex>(grid.total_points())};
  detail::IndexWalker w(grid);
  std::size_t flat = 0;
  do {
    double ex = 0.0;
    for (int a = 0; a < grid.dims; ++a) {
      const auto i = static_cast<std::size_t>(a);
      const double d = grid.coord(a, w.idx[i]) - center.xi[i];
      ex += d * d / (4.0 * widths[i] * widths[i]);
    }
    p.amplitudes[flat] = Complex(std::exp(-ex), 0.0);
    ++flat;
  } while (w.advance());

  const double n = packet_norm(p);
  for (auto& z : p.amplitudes) z /= n;
  return p;
}

/// Exact symbol from a prebuilt table (the fast path).
struct ExactSymbol {
  const cone::RadialTable* table;
};

/// Exact symbol by per-node quadrature (validation path; slow).
struct DirectSymbol {
  cone::QuadParams qp{};
};

/// Leading-term symbol chi(xi) q(xi) / (4 m c); include_cone = false
/// drops the indicator and uses q/(4 m c) on the whole grid.
struct ApproxSymbol {
  bool include_cone = true;
};

using SymbolSpec = std::variant<ExactSymbol, DirectSymbol, ApproxSymbol>;

struct EvolutionConfig {
  SymbolSpec symbol;
  double tau = 0.0;
  cone::ConeConfig cfg{};
};

namespace detail {

/// (s, rho) of a grid node: s = xi_0, rho = norm of the spatial part.
inline void node_s_rho(const GridSpec& g, const std::vector<int>& idx, double& s, double& rho) {
  s = g.coord(0, idx[0]);
  if (g.dims == 2) {
    rho = std::abs(g.coord(1, idx[1]));
  } else {
    const double x1 = g.coord(1, idx[1]);
    const double x2 = g.coord(2, idx[2]);
    const double x3 = g.coord(3, idx[3]);
    rho = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3);
  }
}

inline double symbol_value(const SymbolSpec& sym, const cone::ConeConfig& cfg, double s,
                           double rho) {
  if (std::holds_alternative<ExactSymbol>(sym)) {
    const auto* table = std::get<ExactSymbol>(sym).table;
    if (table == nullptr) throw std::invalid_argument("ExactSymbol: table must not be null");
    return cone::interpolate_lambda(*table, s, rho);
  }
  if (std::holds_alternative<DirectSymbol>(sym))
    return cone::lambda_reduced(s, rho, cfg, std::get<DirectSymbol>(sym).qp);
  const auto& ap = std::get<ApproxSymbol>(sym);
  const double q = s * s - rho * rho;
  if (ap.include_cone) {
    const bool inside = cfg.orientation == cone::Orientation::Future ? cfg.c * s >= rho
                                                                     : cfg.c * s <= -rho;
    if (!inside) return 0.0;
  }
  return q / (4.0 * cfg.m * cfg.c);
}

}  // namespace detail

/// Pointwise phase multiplication phi <- exp(-i lambda tau / hbar) phi.
/// Norm-preserving; evolve(tau1) then evolve(tau2) composes exactly to
/// evolve(tau1 + tau2) because lambda is re-evaluated identically.
inline WavePacket evolve(const WavePacket& packet, const EvolutionConfig& ec) {
  validate_grid(packet.grid);
  cone::validate_config(ec.cfg);
  if (!std::isfinite(ec.tau)) throw std::domain_error("evolve: tau must be finite");

  WavePacket out = packet;
  const double phase_scale = -ec.tau / ec.cfg.hbar;

  if (packet.grid.dims == 2) {
    // Each row shares s = xi_0, and coord(1, n1-j) = -coord(1, j), so
    // lambda(s, |xi_1|) takes only n1/2 + 1 distinct values per row.
    const int n0 = packet.grid.points[0], n1 = packet.grid.points[1];
    std::vector<double> lam_row(static_cast<std::size_t>(n1));
    for (int i = 0; i < n0; ++i) {
      const double s = packet.grid.coord(0, i);
      for (int j = 0; j < n1; ++j) {
        if (j <= n1 / 2) {
          const double rho = std::abs(packet.grid.coord(1, j));
          lam_row[static_cast<std::size_t>(j)] = detail::symbol_value(ec.symbol, ec.cfg, s, rho);
        } else {
          lam_row[static_cast<std::size_t>(j)] = lam_row[static_cast<std::size_t>(n1 - j)];
        }
      }
      for (int j = 0; j < n1; ++j) {
        const std::size_t flat = static_cast<std::size_t>(i) * static_cast<std::size_t>(n1) +
                                 static_cast<std::size_t>(j);
        const double th = phase_scale * lam_row[static_cast<std::size_t>(j)];
        out.amplitudes[flat] *= Complex(std::cos(th), std::sin(th));
      }
    }
    return out;
  }

  detail::IndexWalker w(packet.grid);
  std::size_t flat = 0;
  do {
    double s, rho;
    detail::node_s_rho(packet.grid, w.idx, s, rho);
    const double th = phase_scale * detail::symbol_value(ec.symbol, ec.cfg, s, rho);
    out.amplitudes[flat] *= Complex(std::cos(th), std::sin(th));
    ++flat;
  } while (w.advance());
  return out;
}

/// Unitary centered DFT to the coordinate representation,
///   f(x) = (2 pi)^{-d/2} * sum_xi phi(xi) e^{+i x.xi} * step^d.
inline PositionField to_position(const WavePacket& packet) {
  validate_grid(packet.grid);
  PositionField f{packet.grid, detail::centered_shift(packet.amplitudes, packet.grid)};
  detail::fft_all_axes(f.values, packet.grid, detail::Direction::Inverse);
  double scale = 1.0;
  for (int a = 0; a < packet.grid.dims; ++a)
    scale *= packet.grid.step(a) / std::sqrt(2.0 * M_PI);
  for (auto& z : f.values) z *= scale;
  f.values = detail::centered_shift(f.values, packet.grid);
  return f;
}

/// Inverse of to_position (round trip is the identity to rounding).
inline WavePacket to_momentum(const PositionField& field) {
  validate_grid(field.grid);
  WavePacket p{field.grid, detail::centered_shift(field.values, field.grid)};
  detail::fft_all_axes(p.amplitudes, field.grid, detail::Direction::Forward);
  double scale = 1.0;
  for (int a = 0; a < field.grid.dims; ++a) scale *= field.dual_step(a) / std::sqrt(2.0 * M_PI);
  for (auto& z : p.amplitudes) z *= scale;
  p.amplitudes = detail::centered_shift(p.amplitudes, field.grid);
  return p;
}

/// Sum of f(node) |phi|^2 cellvol / norm^2: conserved by evolve for
/// every f, since the evolution multiplier is unimodular.
inline double momentum_observable_expectation(
    const WavePacket& packet, const std::function<double(const cone::FourMomentum&)>& f) {
  double num = 0.0, den = 0.0;
  detail::IndexWalker w(packet.grid);
  std::size_t flat = 0;
  do {
    cone::FourMomentum xi{};
    for (int a = 0; a < packet.grid.dims; ++a)
      xi.xi[static_cast<std::size_t>(a)] = packet.grid.coord(a, w.idx[static_cast<std::size_t>(a)]);
    const double w2 = std::norm(packet.amplitudes[flat]);
    num += f(xi) * w2;
    den += w2;
    ++flat;
  } while (w.advance());
  if (den == 0.0) throw std::domain_error("momentum_observable_expectation: zero-norm packet");
  return num / den;
}

inline std::vector<double> centroid_momentum(const WavePacket& packet) {
  std::vector<double> c(static_cast<std::size_t>(packet.grid.dims), 0.0);
  for (int a = 0; a < packet.grid.dims; ++a) {
    const int axis = a;
    c[static_cast<std::size_t>(a)] = momentum_observable_expectation(
        packet, [axis](const cone::FourMomentum& xi) { return xi.xi[static_cast<std::size_t>(axis)]; });
  }
  return c;
}

/// |f|^2-weighted mean coordinate of a position-space field.
inline std::vector<double> centroid_position(const PositionField& field) {
  std::vector<double> num(static_cast<std::size_t>(field.grid.dims), 0.0);
  double den = 0.0;
  detail::IndexWalker w(field.grid);
  std::size_t flat = 0;
  do {
    const double w2 = std::norm(field.values[flat]);
    for (int a = 0; a < field.grid.dims; ++a)
      num[static_cast<std::size_t>(a)] += field.dual_coord(a, w.idx[static_cast<std::size_t>(a)]) * w2;
    den += w2;
    ++flat;
  } while (w.advance());
  if (den == 0.0) throw std::domain_error("centroid_position: zero field");
  for (auto& v : num) v /= den;
  return num;
}

/// Fraction of |f|^2 mass in the outermost index layer; large values
/// mean the packet has wrapped around the periodic box.
inline double edge_mass_fraction(const PositionField& field) {
  double edge = 0.0, total = 0.0;
  detail::IndexWalker w(field.grid);
  std::size_t flat = 0;
  do {
    const double w2 = std::norm(field.values[flat]);
    total += w2;
    for (int a = 0; a < field.grid.dims; ++a) {
      const auto i = static_cast<std::size_t>(a);
      if (w.idx[i] == 0 || w.idx[i] == field.grid.points[i] - 1) {
        edge += w2;
        break;
      }
    }
    ++flat;
  } while (w.advance());
  return total > 0.0 ? edge / total : 0.0;
}

struct GroupVelocityReport {
  std::vector<double> measured;
  std::vector<double> predicted;
  double rel_err;
};

/// Ehrenfest check: evolve by tau, compare centroid displacement / tau
/// against grad lambda / hbar at the packet's momentum centroid
/// (central differences of the direct radial evaluation). Throws if the
/// packet wraps around the periodic position box.
inline GroupVelocityReport group_velocity_check(const WavePacket& packet,
                                                const EvolutionConfig& ec, double tau) {
  if (!(tau != 0.0)) throw std::domain_error("group_velocity_check: tau must be nonzero");
  EvolutionConfig run = ec;
  run.tau = tau;

  const PositionField f0 = to_position(packet);
  const PositionField ft = to_position(evolve(packet, run));
  if (edge_mass_fraction(f0) > 1e-6 || edge_mass_fraction(ft) > 1e-6)
    throw std::runtime_error(
        "group_velocity_check: packet wraps around the periodic position box");

  const auto c0 = centroid_position(f0);
  const auto c1 = centroid_position(ft);
  std::vector<double> measured(c0.size());
  for (std::size_t a = 0; a < c0.size(); ++a) measured[a] = (c1[a] - c0[a]) / tau;

  const auto cm = centroid_momentum(packet);
  const double eps = 1e-4;
  const cone::QuadParams qp{};
  std::vector<double> predicted(cm.size(), 0.0);
  if (packet.grid.dims == 2) {
    const double s = cm[0], x1 = cm[1];
    const double rho = std::abs(x1);
    predicted[0] = (cone::lambda_reduced(s + eps, rho, ec.cfg, qp) -
                    cone::lambda_reduced(s - eps, rho, ec.cfg, qp)) /
                   (2.0 * eps * ec.cfg.hbar);
    const double drho = (cone::lambda_reduced(s, rho + eps, ec.cfg, qp) -
                         cone::lambda_reduced(s, rho - eps, ec.cfg, qp)) /
                        (2.0 * eps * ec.cfg.hbar);
    predicted[1] = (x1 >= 0.0 ? 1.0 : -1.0) * drho;
  } else {
    const double s = cm[0];
    const double rho = std::sqrt(cm[1] * cm[1] + cm[2] * cm[2] + cm[3] * cm[3]);
    predicted[0] = (cone::lambda_reduced(s + eps, rho, ec.cfg, qp) -
                    cone::lambda_reduced(s - eps, rho, ec.cfg, qp)) /
                   (2.0 * eps * ec.cfg.hbar);
    const double drho = (cone::lambda_reduced(s, rho + eps, ec.cfg, qp) -
                         cone::lambda_reduced(s, rho - eps, ec.cfg, qp)) /
                        (2.0 * eps * ec.cfg.hbar);
    for (std::size_t a = 1; a < 4; ++a) predicted[a] = drho * cm[a] / rho;
  }

  double dn = 0.0, dd = 0.0;
  for (std::size_t a = 0; a < measured.size(); ++a) {
    dn += (measured[a] - predicted[a]) * (measured[a] - predicted[a]);
    dd += predicted[a] * predicted[a];
  }
  return {measured, predicted, std::sqrt(dn / dd)};
}

/// Relative L2 distance between the evolutions of the same packet under
/// two different symbols at the same tau.
inline double compare_symbols(const WavePacket& packet, double tau, const SymbolSpec& a,
                              const SymbolSpec& b, const cone::ConeConfig& cfg) {
  const WavePacket pa = evolve(packet, EvolutionConfig{a, tau, cfg});
  const WavePacket pb = evolve(packet, EvolutionConfig{b, tau, cfg});
  double diff2 = 0.0, base2 = 0.0;
  for (std::size_t i = 0; i < packet.amplitudes.size(); ++i) {
    diff2 += std::norm(pa.amplitudes[i] - pb.amplitudes[i]);
    base2 += std::norm(packet.amplitudes[i]);
  }
  return std::sqrt(diff2 / base2);
}

/// Relative L2 distance between the exact and leading-term evolutions
/// of the same packet at the same tau.
inline double compare_exact_vs_approx(const WavePacket& packet, double tau,
                                      const cone::RadialTable& table,
                                      const cone::ConeConfig& cfg, bool include_cone = true) {
  return compare_symbols(packet, tau, ExactSymbol{&table}, ApproxSymbol{include_cone}, cfg);
}

}  // namespace tpq::evolution

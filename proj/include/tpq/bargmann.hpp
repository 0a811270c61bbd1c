#pragma once

// Truncated Segal-Bargmann space numerics: Fock bases of normalized
// monomials z^alpha / sqrt(alpha!), Berezin-Toeplitz matrices of
// polynomial symbols via tensor Gauss-Hermite quadrature over the
// Gaussian measure pi^{-n} e^{-|z|^2} dv(z), and a 1D synthesis onto
// orthonormal Hermite functions (the Bargmann-transform image of the
// monomial basis).
//
// Convention: raw polynomial symbols are functions of the Bargmann-plane
// coordinates (x_j, y_j) = (Re z_j, Im z_j). Classical phase-space
// observables enter through factories that apply the identification
// q_j + i p_j = sqrt(2) z_j; in particular the harmonic oscillator
// (1/2) sum (q_j^2 + p_j^2) becomes |z|^2, whose Toeplitz matrix is
// diag(n + |alpha|), while the symbol z_j itself quantizes to the
// creation operator with sqrt(alpha_j + 1) entries.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tpq/hermite.hpp"
#include "tpq/quadrature.hpp"

namespace tpq::bargmann {

using Complex = std::complex<double>;

struct MultiIndex {
  std::vector<int> alpha;

  int total() const {
    int t = 0;
    for (int a : alpha) t += a;
    return t;
  }
  bool operator==(const MultiIndex&) const = default;
};

/// Orders by (|alpha|, lexicographic).
inline bool basis_order(const MultiIndex& a, const MultiIndex& b) {
  const int ta = a.total(), tb = b.total();
  if (ta != tb) return ta < tb;
  return a.alpha < b.alpha;
}

struct FockBasis {
  int n = 0;           // number of complex variables
  int degree_cap = 0;  // max total degree
  std::vector<MultiIndex> indices;

  std::size_t size() const { return indices.size(); }
};

/// All multi-indices with |alpha| <= degree_cap, sorted by (|alpha|, lex).
inline FockBasis build_basis(int n, int degree_cap) {
  if (n < 1) throw std::domain_error("build_basis: n must be >= 1");
  if (degree_cap < 0) throw std::domain_error("build_basis: degree_cap must be >= 0");
  FockBasis basis{n, degree_cap, {}};
  MultiIndex cur{std::vector<int>(static_cast<std::size_t>(n), 0)};
  // Odometer enumeration of the simplex |alpha| <= cap.
  auto rec = [&](auto&& self, int axis, int remaining) -> void {
    if (axis == n) {
      basis.indices.push_back(cur);
      return;
    }
    for (int a = 0; a <= remaining; ++a) {
      cur.alpha[static_cast<std::size_t>(axis)] = a;
      self(self, axis + 1, remaining - a);
    }
    cur.alpha[static_cast<std::size_t>(axis)] = 0;
  };
  rec(rec, 0, degree_cap);
  std::sort(basis.indices.begin(), basis.indices.end(), basis_order);
  return basis;
}

/// One monomial term c * prod_j x_j^{xp_j} y_j^{yp_j} in the
/// Bargmann-plane coordinates x_j = Re z_j, y_j = Im z_j.
struct PolyTerm {
  Complex coeff;
  std::vector<int> x_pow;
  std::vector<int> y_pow;
};

struct PolySymbol {
  int n = 0;
  std::vector<PolyTerm> terms;

  int degree() const {
    int d = 0;
    for (const auto& t : terms) {
      int td = 0;
      for (int p : t.x_pow) td += p;
      for (int p : t.y_pow) td += p;
      d = std::max(d, td);
    }
    return d;
  }

  /// Constant symbol 1 (quantizes to the identity on any truncation).
  static PolySymbol one(int n) {
    PolySymbol s{n, {}};
    s.terms.push_back({Complex(1.0, 0.0), std::vector<int>(static_cast<std::size_t>(n), 0),
                       std::vector<int>(static_cast<std::size_t>(n), 0)});
    return s;
  }

  /// Classical oscillator (1/2) sum_j (q_j^2 + p_j^2) expressed in
  /// Bargmann-plane coordinates via q_j + i p_j = sqrt(2) z_j, i.e.
  /// |z|^2 = sum_j (x_j^2 + y_j^2). Quantizes to diag(n + |alpha|).
  static PolySymbol harmonic_oscillator(int n) {
    PolySymbol s{n, {}};
    const std::vector<int> zero(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      auto xp = zero, yp = zero;
      xp[static_cast<std::size_t>(j)] = 2;
      s.terms.push_back({Complex(1.0, 0.0), xp, zero});
      yp[static_cast<std::size_t>(j)] = 2;
      s.terms.push_back({Complex(1.0, 0.0), zero, yp});
    }
    return s;
  }

  /// The coordinate symbol z_j = x_j + i y_j (creation operator a_j^+).
  static PolySymbol coordinate_z(int n, int j) {
    if (j < 0 || j >= n) throw std::domain_error("coordinate_z: axis out of range");
    PolySymbol s{n, {}};
    const std::vector<int> zero(static_cast<std::size_t>(n), 0);
    auto xp = zero, yp = zero;
    xp[static_cast<std::size_t>(j)] = 1;
    yp[static_cast<std::size_t>(j)] = 1;
    s.terms.push_back({Complex(1.0, 0.0), xp, zero});
    s.terms.push_back({Complex(0.0, 1.0), zero, yp});
    return s;
  }
};

struct QuadratureSpec {
  int nodes_per_axis = 0;

  /// Node count giving exactness for all integrand polynomials that a
  /// basis with this cap and a symbol of this degree can produce
  /// (Gauss-Hermite with N nodes is exact through degree 2N-1 per axis),
  /// and at least degree_cap + 2.
  static QuadratureSpec for_basis(int degree_cap, int symbol_degree) {
    const int exactness = (2 * degree_cap + symbol_degree + 2) / 2;
    return {std::max(degree_cap + 2, exactness)};
  }
};

struct ToeplitzMatrix {
  FockBasis basis;
  Eigen::MatrixXcd entries;
};

/// Entries (alpha, beta) = integral of k(x,y) conj(e_alpha(z)) e_beta(z)
/// over dmu_n, z = x + iy, by tensor Gauss-Hermite over R^{2n}.
inline ToeplitzMatrix toeplitz_matrix(const PolySymbol& symbol, const FockBasis& basis,
                                      const QuadratureSpec& quad) {
  if (symbol.n != basis.n)
    throw std::invalid_argument("toeplitz_matrix: symbol and basis dimension mismatch");
  const int n = basis.n;
  const int cap = basis.degree_cap;
  const int N = quad.nodes_per_axis;
  if (N < cap + 2)
    throw std::invalid_argument("toeplitz_matrix: nodes_per_axis must be >= degree_cap + 2");
  if (2 * N - 1 < 2 * cap + symbol.degree())
    throw std::invalid_argument(
        "toeplitz_matrix: quadrature not exact for this symbol degree (need more nodes)");

  const GaussHermite gh(N);
  const std::size_t B = basis.size();

  std::vector<double> inv_sqrt_fact(static_cast<std::size_t>(cap) + 1);
  double fact = 1.0;
  for (int k = 0; k <= cap; ++k) {
    if (k > 0) fact *= k;
    inv_sqrt_fact[static_cast<std::size_t>(k)] = 1.0 / std::sqrt(fact);
  }

  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(B),
                                              static_cast<Eigen::Index>(B));

  // Odometer over the 2n quadrature axes: axes [0,n) carry x_j, [n,2n) carry y_j.
  std::vector<int> idx(static_cast<std::size_t>(2 * n), 0);
  // z_j^k for k = 0..cap at the current point.
  std::vector<std::vector<Complex>> zpow(static_cast<std::size_t>(n),
                                         std::vector<Complex>(static_cast<std::size_t>(cap) + 1));
  std::vector<Complex> e_vals(B);
  std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));

  while (true) {
    double w = 1.0;
    for (int a = 0; a < 2 * n; ++a) w *= gh.w[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];

    for (int j = 0; j < n; ++j) {
      x[static_cast<std::size_t>(j)] = gh.x[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
      y[static_cast<std::size_t>(j)] = gh.x[static_cast<std::size_t>(idx[static_cast<std::size_t>(n + j)])];
      const Complex z(x[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(j)]);
      auto& zp = zpow[static_cast<std::size_t>(j)];
      zp[0] = Complex(1.0, 0.0);
      for (int k = 1; k <= cap; ++k) zp[static_cast<std::size_t>(k)] = zp[static_cast<std::size_t>(k - 1)] * z;
    }

    for (std::size_t b = 0; b < B; ++b) {
      Complex v(1.0, 0.0);
      const auto& alpha = basis.indices[b].alpha;
      for (int j = 0; j < n; ++j) {
        const int a = alpha[static_cast<std::size_t>(j)];
        v *= zpow[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] *
             inv_sqrt_fact[static_cast<std::size_t>(a)];
      }
      e_vals[b] = v;
    }

    Complex k_val(0.0, 0.0);
    for (const auto& term : symbol.terms) {
      double mono = 1.0;
      for (int j = 0; j < n; ++j) {
        for (int p = 0; p < term.x_pow[static_cast<std::size_t>(j)]; ++p) mono *= x[static_cast<std::size_t>(j)];
        for (int p = 0; p < term.y_pow[static_cast<std::size_t>(j)]; ++p) mono *= y[static_cast<std::size_t>(j)];
      }
      k_val += term.coeff * mono;
    }

    const Complex wk = w * k_val;
    for (std::size_t r = 0; r < B; ++r) {
      const Complex cr = std::conj(e_vals[r]) * wk;
      for (std::size_t c = 0; c < B; ++c) M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += cr * e_vals[c];
    }

    int axis = 0;
    while (axis < 2 * n && ++idx[static_cast<std::size_t>(axis)] == N) {
      idx[static_cast<std::size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == 2 * n) break;
  }

  M *= std::pow(M_PI, -n);
  return {basis, std::move(M)};
}

/// Gram matrix of the basis under dmu_n; identity up to rounding.
inline Eigen::MatrixXcd gram_matrix(const FockBasis& basis, const QuadratureSpec& quad) {
  return toeplitz_matrix(PolySymbol::one(basis.n), basis, quad).entries;
}

/// Max absolute deviation of the oscillator Toeplitz matrix from
/// diag(n + |alpha|).
inline double harmonic_oscillator_check(int n, int cap) {
  const FockBasis basis = build_basis(n, cap);
  const auto symbol = PolySymbol::harmonic_oscillator(n);
  const auto tm = toeplitz_matrix(symbol, basis, QuadratureSpec::for_basis(cap, symbol.degree()));
  double dev = 0.0;
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const double expected = (r == c) ? n + basis.indices[r].total() : 0.0;
      dev = std::max(dev, std::abs(tm.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) - Complex(expected, 0.0)));
    }
  return dev;
}

/// Synthesis sum_k coeffs_k h_k(x) on a sample grid, where h_k are the
/// L2-orthonormal Hermite functions: the coordinate-representation image
/// of the n=1 monomial basis under the Bargmann correspondence.
inline std::vector<Complex> bargmann_synthesis_1d(const std::vector<Complex>& coeffs,
                                                  const std::vector<double>& x_grid) {
  std::vector<Complex> out(x_grid.size(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < x_grid.size(); ++i) {
    const auto h = hermite_functions(static_cast<int>(coeffs.size()), x_grid[i]);
    for (std::size_t k = 0; k < coeffs.size(); ++k) out[i] += coeffs[k] * h[k];
  }
  return out;
}

}  // namespace tpq::bargmann

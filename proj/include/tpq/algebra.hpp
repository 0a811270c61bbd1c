#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tpq::algebra {

/// Spectral parameter of the two-projection pair, p in [0,1].
class SpinParameter {
 public:
  explicit SpinParameter(double p) : p_(p) {
    if (!std::isfinite(p) || p < 0.0 || p > 1.0)
      throw std::domain_error("SpinParameter: p must lie in [0,1], got " + std::to_string(p));
  }
  double value() const { return p_; }

 private:
  double p_;
};

struct Matrix2 {
  std::array<std::array<double, 2>, 2> a{};

  static Matrix2 identity() { return {{{{1.0, 0.0}, {0.0, 1.0}}}}; }

  Matrix2 operator*(const Matrix2& o) const {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.a[i][j] = a[i][0] * o.a[0][j] + a[i][1] * o.a[1][j];
    return r;
  }
  Matrix2 operator+(const Matrix2& o) const {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.a[i][j] = a[i][j] + o.a[i][j];
    return r;
  }
  Matrix2 operator-(const Matrix2& o) const {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.a[i][j] = a[i][j] - o.a[i][j];
    return r;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& row : a)
      for (double v : row) s += v * v;
    return std::sqrt(s);
  }

  double max_abs_diff(const Matrix2& o) const {
    double m = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a[i][j] - o.a[i][j]));
    return m;
  }

  bool is_symmetric(double tol) const { return std::abs(a[0][1] - a[1][0]) <= tol; }
};

enum class SpinVariant { Scalar, Spinor, Vector };

struct SpinClass {
  SpinVariant variant;
  int representation_dimension;
  bool reducible;

  bool operator==(const SpinClass&) const = default;
};

inline const char* to_string(SpinVariant v) {
  switch (v) {
    case SpinVariant::Scalar: return "scalar";
    case SpinVariant::Spinor: return "spinor";
    case SpinVariant::Vector: return "vector";
  }
  return "?";
}

/// Image of the quantum projection under the two-projection
/// representation: [[1-p, sqrt(p(1-p))], [sqrt(p(1-p)), p]].
inline Matrix2 rep_pq(const SpinParameter& p) {
  const double pv = p.value();
  const double s = std::sqrt(pv * (1.0 - pv));
  return {{{{1.0 - pv, s}, {s, pv}}}};
}

/// Image of the causal projection: [[1,0],[0,0]], independent of p.
inline Matrix2 rep_pr() { return {{{{1.0, 0.0}, {0.0, 0.0}}}}; }

enum class Letter { Q, R };

/// Product of generator images in word order.
inline Matrix2 represent_word(std::span<const Letter> word, const SpinParameter& p) {
  if (word.empty()) throw std::domain_error("represent_word: word must be nonempty");
  Matrix2 m = (word[0] == Letter::Q) ? rep_pq(p) : rep_pr();
  for (std::size_t i = 1; i < word.size(); ++i)
    m = m * ((word[i] == Letter::Q) ? rep_pq(p) : rep_pr());
  return m;
}

inline Matrix2 observable_sum(const SpinParameter& p) { return rep_pq(p) + rep_pr(); }

// Endpoint snapping for floating-point inputs: values within 1e-12 of
// an endpoint classify as the endpoint.
inline constexpr double kEndpointTol = 1e-12;

inline SpinClass classify_spin(const SpinParameter& p) {
  const double pv = p.value();
  if (pv <= kEndpointTol) return {SpinVariant::Scalar, 1, false};
  if (pv >= 1.0 - kEndpointTol) return {SpinVariant::Vector, 2, true};
  return {SpinVariant::Spinor, 2, false};
}

/// Frobenius norm of [rep_pq(p), rep_pr()]; vanishes exactly at p in {0,1}.
inline double commutator_norm(const SpinParameter& p) {
  const Matrix2 q = rep_pq(p);
  const Matrix2 r = rep_pr();
  return (q * r - r * q).frobenius_norm();
}

/// Checks (rep_pq(p) - rep_pr())^2 == p*I and returns p, tying the
/// representation parameter to the spectral value of (P_Q - P_R)^2.
inline double difference_squared_value(const SpinParameter& p) {
  const Matrix2 d = rep_pq(p) - rep_pr();
  const Matrix2 sq = d * d;
  Matrix2 expected = Matrix2::identity();
  for (auto& row : expected.a)
    for (double& v : row) v *= p.value();
  if (sq.max_abs_diff(expected) > 1e-12)
    throw std::runtime_error("difference_squared_value: (P_Q - P_R)^2 deviates from p*I beyond 1e-12");
  return p.value();
}

/// Spin classes admitted by the propagation type: luminal propagation
/// admits only the vector class; otherwise all three occur.
inline std::vector<SpinClass> classify_propagation(bool luminal) {
  if (luminal) return {classify_spin(SpinParameter(1.0))};
  return {classify_spin(SpinParameter(0.0)), classify_spin(SpinParameter(0.5)),
          classify_spin(SpinParameter(1.0))};
}

}  // namespace tpq::algebra

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tpq {

/// Values h_0(x)..h_{count-1}(x) of the L^2(R)-orthonormal Hermite
/// functions, by the stable normalized recurrence with the Gaussian
/// factor carried along:
///   h_0 = pi^{-1/4} e^{-x^2/2},
///   h_{k+1} = sqrt(2/(k+1)) x h_k - sqrt(k/(k+1)) h_{k-1}.
inline std::vector<double> hermite_functions(int count, double x) {
  if (count < 1) throw std::invalid_argument("hermite_functions: count >= 1 required");
  std::vector<double> h(count);
  h[0] = std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x);
  if (count > 1) h[1] = std::sqrt(2.0) * x * h[0];
  for (int k = 1; k + 1 < count; ++k)
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * x * h[k] - std::sqrt(double(k) / (k + 1)) * h[k - 1];
  return h;
}

}  // namespace tpq

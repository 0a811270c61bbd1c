#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>

#include "tpq/spectrum.hpp"

using namespace tpq::cone;
using namespace tpq::spectrum;

namespace {

const RadialTable& scan_table() {
  static const RadialTable t = build_radial_table(
      linspace(-10.0, 10.0, 200), linspace(0.0, 4.0, 50), ConeConfig{}, QuadParams{});
  return t;
}

}  // namespace

TEST_CASE("the scanned squared-difference values fill the unit interval") {
  const SpectrumReport rep = spectrum_range(scan_table());
  CHECK(rep.observed_min > 0.0);
  CHECK(rep.observed_min < 1e-3);
  CHECK(rep.observed_max <= 1.0);  // saturates at 1 far inside the past region
  CHECK(rep.observed_max > 0.999);
  CHECK(rep.max_gap < 0.01);
  REQUIRE(rep.coverage_histogram.size() == static_cast<std::size_t>(kHistogramBins));
  for (long count : rep.coverage_histogram) CHECK(count > 0);
}

TEST_CASE("a table that does not span the scan window is rejected") {
  const RadialTable small = build_radial_table(linspace(-5.0, 5.0, 41), linspace(0.0, 2.0, 9),
                                               ConeConfig{}, QuadParams{});
  REQUIRE_THROWS_AS(spectrum_range(small), std::invalid_argument);
}

TEST_CASE("finite sections stay within the unit interval and tighten monotonically") {
  const FiniteSection f4 = finite_section(4, 0.0, scan_table());
  const FiniteSection f16 = finite_section(16, 0.0, scan_table());
  const FiniteSection f64 = finite_section(64, 0.0, scan_table());

  REQUIRE(f4.eigenvalues.size() == 4);
  REQUIRE(f16.eigenvalues.size() == 16);
  REQUIRE(f64.eigenvalues.size() == 64);

  for (const FiniteSection* f : {&f4, &f16, &f64}) {
    for (Eigen::Index i = 0; i < f->eigenvalues.size(); ++i) {
      CHECK(f->eigenvalues(i) >= -1e-8);
      CHECK(f->eigenvalues(i) <= 1.0 + 1e-8);
      if (i > 0) CHECK(f->eigenvalues(i) >= f->eigenvalues(i - 1));
    }
  }

  CHECK(f4.eigenvalues(0) == Catch::Approx(0.28515455140919171).margin(1e-12));
  CHECK(f4.eigenvalues(3) == Catch::Approx(0.99602468596119287).margin(1e-12));
  CHECK(f16.eigenvalues(0) == Catch::Approx(0.00036175420282750625).margin(1e-12));
  CHECK(f16.eigenvalues(15) == Catch::Approx(0.9999999903693243).margin(1e-12));
  CHECK(std::abs(f64.eigenvalues(0)) < 1e-8);
  CHECK(f64.eigenvalues(63) == Catch::Approx(1.0).margin(1e-8));

  // Growing sections push the extremes outward.
  CHECK(f16.eigenvalues(0) < f4.eigenvalues(0));
  CHECK(f64.eigenvalues(0) < f16.eigenvalues(0));
  CHECK(f16.eigenvalues(15) > f4.eigenvalues(3));
  CHECK(f64.eigenvalues(63) > f16.eigenvalues(15));
}

TEST_CASE("finite-section arguments are validated") {
  REQUIRE_THROWS_AS(finite_section(1, 0.0, scan_table()), std::domain_error);
  REQUIRE_THROWS_AS(finite_section(4, -0.5, scan_table()), std::domain_error);
  REQUIRE_THROWS_AS(finite_section(4, 0.0, scan_table(), 3), std::invalid_argument);
}

TEST_CASE("spectral values map back to spin classes") {
  CHECK(spin_from_spectral_value(0.0).variant == tpq::algebra::SpinVariant::Scalar);
  CHECK(spin_from_spectral_value(0.3).variant == tpq::algebra::SpinVariant::Spinor);
  CHECK(spin_from_spectral_value(1.0).variant == tpq::algebra::SpinVariant::Vector);
  const FiniteSection f16 = finite_section(16, 0.0, scan_table());
  CHECK(spin_from_spectral_value(f16.eigenvalues(0)).variant ==
        tpq::algebra::SpinVariant::Spinor);
  REQUIRE_THROWS_AS(spin_from_spectral_value(-0.1), std::domain_error);
  REQUIRE_THROWS_AS(spin_from_spectral_value(1.1), std::domain_error);
}

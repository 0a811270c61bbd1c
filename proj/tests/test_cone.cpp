#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tpq/cone.hpp"

using namespace tpq::cone;

namespace {
const ConeConfig kCfg{};
const QuadParams kQp{};
}  // namespace

TEST_CASE("cone indicator with both orientations") {
  CHECK(chi_cone({{1.0, 1.0, 0.0, 0.0}}, kCfg) == 1.0);  // boundary included
  CHECK(chi_cone({{1.0, 1.0 + 1e-9, 0.0, 0.0}}, kCfg) == 0.0);
  CHECK(chi_cone({{2.0, 1.0, 1.0, 0.5}}, kCfg) == 1.0);
  CHECK(chi_cone({{-2.0, 1.0, 0.0, 0.0}}, kCfg) == 0.0);

  ConeConfig past = kCfg;
  past.orientation = Orientation::Past;
  CHECK(chi_cone({{-1.0, 1.0, 0.0, 0.0}}, past) == 1.0);
  CHECK(chi_cone({{1.0, 0.5, 0.0, 0.0}}, past) == 0.0);
}

TEST_CASE("quadratic form and configuration validation") {
  CHECK(minkowski_q({{2.0, 1.0, 0.0, 0.0}}) == 3.0);
  CHECK(minkowski_q({{1.0, 1.0, 1.0, 1.0}}) == -2.0);
  ConeConfig bad = kCfg;
  bad.m = 0.0;
  REQUIRE_THROWS_AS(validate_config(bad), std::domain_error);
}

TEST_CASE("reference values of the smeared symbol and indicator") {
  CHECK(lambda_reduced(0.0, 0.0, kCfg, kQp) ==
        Catch::Approx(0.01707747154594767).epsilon(1e-9));
  CHECK(mu_reduced(0.0, 0.0, kCfg, kQp) ==
        Catch::Approx(0.09084505690810465).epsilon(1e-9));
  CHECK(lambda_reduced(2.0, 1.0, kCfg, kQp) ==
        Catch::Approx(0.6322772692909472).epsilon(1e-9));
  CHECK(lambda_reduced(4.0, 0.0, kCfg, kQp) == Catch::Approx(3.75016395636).epsilon(1e-8));

  // Far outside the cone the symbol is positive but astronomically small.
  const double deep_out = lambda_reduced(-10.0, 0.0, kCfg, kQp);
  CHECK(deep_out > 1e-52);
  CHECK(deep_out < 1e-50);

  // Deep inside, the complementary indicator stays representable.
  const double omm = one_minus_mu_reduced(10.0, 4.0, kCfg, kQp);
  CHECK(omm == Catch::Approx(1.75e-9).epsilon(1e-2));
}

TEST_CASE("indicator and its complement sum to one where both are moderate") {
  for (auto [s, rho] : {std::pair{2.0, 1.0}, std::pair{0.0, 0.0}, std::pair{-1.0, 2.0}}) {
    const double m = mu_reduced(s, rho, kCfg, kQp);
    const double o = one_minus_mu_reduced(s, rho, kCfg, kQp);
    CHECK(m + o == Catch::Approx(1.0).margin(1e-12));
    CHECK(m > 0.0);
    CHECK(o > 0.0);
  }
}

TEST_CASE("past orientation mirrors the time argument") {
  ConeConfig past = kCfg;
  past.orientation = Orientation::Past;
  for (auto [s, rho] : {std::pair{2.0, 1.0}, std::pair{-3.0, 0.5}, std::pair{0.5, 2.0}}) {
    CHECK(lambda_reduced(s, rho, past, kQp) == lambda_reduced(-s, rho, kCfg, kQp));
    CHECK(mu_reduced(s, rho, past, kQp) == mu_reduced(-s, rho, kCfg, kQp));
  }
}

TEST_CASE("four-vector wrappers reduce to the radial profile") {
  const FourMomentum xi{{2.0, 0.6, 0.0, 0.8}};  // spatial norm 1
  CHECK(lambda(xi, kCfg, kQp) == Catch::Approx(lambda_reduced(2.0, 1.0, kCfg, kQp)).epsilon(1e-14));
  CHECK(mu(xi, kCfg, kQp) == Catch::Approx(mu_reduced(2.0, 1.0, kCfg, kQp)).epsilon(1e-14));
}

TEST_CASE("radial cutoff control") {
  QuadParams tight = kQp;
  tight.r_cutoff = 5.0;  // below the required sqrt(s^2+rho^2)+8
  REQUIRE_THROWS_AS(lambda_reduced(10.0, 4.0, kCfg, tight), std::invalid_argument);

  QuadParams wide = kQp;
  wide.r_cutoff = 30.0;
  CHECK(lambda_reduced(2.0, 1.0, kCfg, wide) ==
        Catch::Approx(lambda_reduced(2.0, 1.0, kCfg, kQp)).epsilon(1e-9));
}

TEST_CASE("deep-cone scaling approaches the leading term") {
  const FourMomentum xi{{2.0, 1.0, 0.0, 0.0}};
  CHECK(lambda_asymptotic(xi, kCfg) == Catch::Approx(0.75).margin(1e-15));

  const auto rows = asymptotic_convergence(xi, {2.0, 4.0, 8.0, 16.0}, kCfg, kQp);
  REQUIRE(rows.size() == 4);
  const double dev2 = std::abs(rows[0].ratio - 1.0);
  const double dev4 = std::abs(rows[1].ratio - 1.0);
  const double dev8 = std::abs(rows[2].ratio - 1.0);
  const double dev16 = std::abs(rows[3].ratio - 1.0);
  CHECK(dev2 == Catch::Approx(7.607e-2).margin(1e-4));
  CHECK(dev4 == Catch::Approx(2.083e-2).margin(3e-5));
  CHECK(dev8 == Catch::Approx(5.208e-3).margin(1e-5));
  CHECK(dev16 == Catch::Approx(1.302e-3).margin(3e-6));
  CHECK(dev4 < dev2);
  CHECK(dev8 < dev4);
  CHECK(dev16 < dev8);
  for (const auto& r : rows) CHECK(r.leading == 0.75);

  REQUIRE_THROWS_AS(asymptotic_convergence({{1.0, 2.0, 0.0, 0.0}}, {2.0, 4.0}, kCfg, kQp),
                    std::domain_error);
  REQUIRE_THROWS_AS(asymptotic_convergence(xi, {2.0, 2.0}, kCfg, kQp), std::domain_error);
  REQUIRE_THROWS_AS(asymptotic_convergence(xi, {-1.0, 2.0}, kCfg, kQp), std::domain_error);
  REQUIRE_THROWS_AS(asymptotic_convergence(xi, {}, kCfg, kQp), std::domain_error);
}

TEST_CASE("independent oracles agree with the radial reduction") {
  const FourMomentum xi{{2.0, 1.0, 0.0, 0.0}};
  const double lam = lambda(xi, kCfg, kQp);

  const OracleResult tg = lambda_oracle(xi, kCfg, TensorGrid{32});
  CHECK(tg.error_estimate == 0.0);
  CHECK(std::abs(tg.value - lam) <= 0.005 * lam);

  const OracleResult mc = lambda_oracle(xi, kCfg, MonteCarlo{200'000, 42});
  REQUIRE(mc.error_estimate > 0.0);
  CHECK(std::abs(mc.value - lam) <= 4.0 * mc.error_estimate);

  REQUIRE_THROWS_AS(lambda_oracle(xi, kCfg, MonteCarlo{50'000, 0}), std::invalid_argument);
  REQUIRE_THROWS_AS(lambda_oracle(xi, kCfg, TensorGrid{16}), std::invalid_argument);
}

TEST_CASE("boost diagnostics") {
  const FourMomentum xi{{2.0, 1.0, 0.0, 0.0}};
  const FourMomentum b = boost_xi(xi, 0.3);
  CHECK(minkowski_q(b) == Catch::Approx(minkowski_q(xi)).epsilon(1e-14));
  CHECK(lorentz_deviation(xi, 0.0, kCfg, kQp) == 0.0);
  const double dev = lorentz_deviation(xi, 0.5, kCfg, kQp);
  CHECK(std::isfinite(dev));
  CHECK(dev >= 0.0);
}

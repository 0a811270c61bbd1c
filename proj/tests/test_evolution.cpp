#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "tpq/evolution.hpp"

using namespace tpq::cone;
using namespace tpq::evolution;

namespace {

const ConeConfig kCfg{};

const RadialTable& hull_table() {
  static const RadialTable t = build_radial_table(linspace(-5.0, 5.0, 161),
                                                  linspace(0.0, 5.0, 81), kCfg, QuadParams{});
  return t;
}

GridSpec grid2d(int n, double half) {
  return GridSpec{2, {n, n}, {{-half, half}, {-half, half}}};
}

double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("grid validation") {
  REQUIRE_NOTHROW(validate_grid(grid2d(8, 4.0)));
  REQUIRE_THROWS_AS(validate_grid(GridSpec{3, {8, 8, 8}, {{-1, 1}, {-1, 1}, {-1, 1}}}),
                    std::domain_error);
  REQUIRE_THROWS_AS(validate_grid(GridSpec{2, {10, 8}, {{-1, 1}, {-1, 1}}}), std::domain_error);
  REQUIRE_THROWS_AS(validate_grid(GridSpec{2, {8, 8}, {{-1, 2}, {-1, 1}}}), std::domain_error);
  REQUIRE_THROWS_AS(validate_grid(GridSpec{2, {8}, {{-1, 1}, {-1, 1}}}), std::domain_error);
  REQUIRE_THROWS_AS(
      validate_grid(GridSpec{4, {128, 8, 8, 8}, {{-1, 1}, {-1, 1}, {-1, 1}, {-1, 1}}}),
      std::domain_error);
  const GridSpec g = grid2d(8, 4.0);
  CHECK(g.coord(0, 4) == 0.0);
  CHECK(g.step(0) == 1.0);
}

TEST_CASE("packet construction is unit norm and guarded") {
  const GridSpec g = grid2d(256, 4.0);
  const WavePacket p = make_gaussian_packet(g, {{1.0, 0.5, 0.0, 0.0}}, {0.25, 0.25});
  CHECK(packet_norm(p) == Catch::Approx(1.0).margin(1e-12));

  // width below four cells
  REQUIRE_THROWS_AS(make_gaussian_packet(g, {{0.0, 0.0, 0.0, 0.0}}, {0.01, 0.25}),
                    std::invalid_argument);
  // truncated tail: center too close to the boundary
  REQUIRE_THROWS_AS(make_gaussian_packet(g, {{3.9, 0.0, 0.0, 0.0}}, {0.25, 0.25}),
                    std::invalid_argument);
  // center outside
  REQUIRE_THROWS_AS(make_gaussian_packet(g, {{4.5, 0.0, 0.0, 0.0}}, {0.25, 0.25}),
                    std::domain_error);
  // nonzero center beyond the grid dimensions
  REQUIRE_THROWS_AS(make_gaussian_packet(g, {{1.0, 0.5, 0.3, 0.0}}, {0.25, 0.25}),
                    std::domain_error);
  // one width per axis
  REQUIRE_THROWS_AS(make_gaussian_packet(g, {{1.0, 0.5, 0.0, 0.0}}, {0.25}), std::domain_error);
}

TEST_CASE("position transform matches the analytic profile") {
  const GridSpec g = grid2d(256, 4.0);
  const double c0 = 1.0, c1 = 0.5, sigma = 0.25;
  const WavePacket p = make_gaussian_packet(g, {{c0, c1, 0.0, 0.0}}, {sigma, sigma});
  const PositionField f = to_position(p);

  const double amp1d = std::pow(2.0 * sigma * sigma / M_PI, 0.25);
  const int n = g.points[0];
  for (int k0 : {n / 2 - 4, n / 2, n / 2 + 3})
    for (int k1 : {n / 2 - 2, n / 2 + 4}) {
      const double x0 = f.dual_coord(0, k0);
      const double x1 = f.dual_coord(1, k1);
      const Complex expected = amp1d * amp1d *
                               std::exp(-sigma * sigma * (x0 * x0 + x1 * x1)) *
                               std::exp(Complex(0.0, c0 * x0 + c1 * x1));
      const Complex got = f.values[static_cast<std::size_t>(k0) * static_cast<std::size_t>(n) +
                                   static_cast<std::size_t>(k1)];
      CHECK(std::abs(got - expected) < 1e-10);
    }

  // The transform is unitary: position-space mass equals 1.
  double mass = 0.0;
  for (const auto& z : f.values) mass += std::norm(z);
  CHECK(mass * f.dual_cell_volume() == Catch::Approx(1.0).margin(1e-10));
}

TEST_CASE("momentum and position transforms are mutually inverse") {
  const GridSpec g = grid2d(128, 4.0);
  const WavePacket p = make_gaussian_packet(g, {{0.5, -0.5, 0.0, 0.0}}, {0.3, 0.4});
  const WavePacket back = to_momentum(to_position(p));
  CHECK(max_abs_diff(p.amplitudes, back.amplitudes) < 1e-10);
}

TEST_CASE("evolution is unitary, composes additively, and fixes tau = 0") {
  const GridSpec g = grid2d(128, 4.0);
  const WavePacket p = make_gaussian_packet(g, {{2.0, 0.5, 0.0, 0.0}}, {0.25, 0.25});
  const EvolutionConfig ec{ApproxSymbol{true}, 0.0, kCfg};

  EvolutionConfig e0 = ec;
  const WavePacket same = evolve(p, e0);
  CHECK(max_abs_diff(p.amplitudes, same.amplitudes) == 0.0);

  EvolutionConfig ea = ec;
  ea.tau = 0.2;
  EvolutionConfig eb = ec;
  eb.tau = 0.3;
  EvolutionConfig eab = ec;
  eab.tau = 0.5;
  const WavePacket split = evolve(evolve(p, ea), eb);
  const WavePacket joint = evolve(p, eab);
  CHECK(max_abs_diff(split.amplitudes, joint.amplitudes) < 1e-13);
  CHECK(packet_norm(joint) == Catch::Approx(1.0).margin(1e-13));

  const auto q_obs = [](const FourMomentum& xi) { return minkowski_q(xi); };
  const double before = momentum_observable_expectation(p, q_obs);
  const double after = momentum_observable_expectation(joint, q_obs);
  CHECK(std::abs(after - before) <= 1e-12 * std::abs(before));
}

TEST_CASE("mirrored spatial nodes acquire identical phases") {
  const GridSpec g = grid2d(16, 4.0);
  WavePacket p{g, std::vector<Complex>(g.total_points(), Complex(1.0, 0.0))};
  EvolutionConfig ec{ApproxSymbol{false}, 0.7, kCfg};
  const WavePacket out = evolve(p, ec);
  const int n = g.points[0];
  for (int i = 0; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      const auto a = out.amplitudes[static_cast<std::size_t>(i) * 16 + static_cast<std::size_t>(j)];
      const auto b = out.amplitudes[static_cast<std::size_t>(i) * 16 +
                                    static_cast<std::size_t>(n - j)];
      CHECK(std::abs(a - b) == 0.0);
    }
}

TEST_CASE("four-dimensional evolution applies the radial phase") {
  const GridSpec g{4, {8, 8, 8, 8}, {{-4, 4}, {-4, 4}, {-4, 4}, {-4, 4}}};
  WavePacket p{g, std::vector<Complex>(g.total_points(), Complex(1.0, 0.0))};
  const double tau = 0.4;
  EvolutionConfig ec{ApproxSymbol{true}, tau, kCfg};
  const WavePacket out = evolve(p, ec);

  // node (7,5,4,4) -> coords (3,1,0,0): inside, q = 8, phase exp(-i 8/4 tau)
  const std::size_t inside = ((std::size_t{7} * 8 + 5) * 8 + 4) * 8 + 4;
  const Complex expected = std::exp(Complex(0.0, -2.0 * tau));
  CHECK(std::abs(out.amplitudes[inside] - expected) < 1e-14);

  // node (6,1,4,4) -> coords (2,-3,0,0): outside the cone, unchanged
  const std::size_t outside = ((std::size_t{6} * 8 + 1) * 8 + 4) * 8 + 4;
  CHECK(out.amplitudes[outside] == Complex(1.0, 0.0));

  CHECK(packet_norm(out) == Catch::Approx(packet_norm(p)).margin(1e-12));
  const WavePacket back = to_momentum(to_position(out));
  CHECK(max_abs_diff(out.amplitudes, back.amplitudes) < 1e-10);
}

TEST_CASE("a null table in the exact symbol is rejected") {
  const GridSpec g = grid2d(8, 4.0);
  WavePacket p{g, std::vector<Complex>(g.total_points(), Complex(1.0, 0.0))};
  EvolutionConfig ec{ExactSymbol{nullptr}, 0.1, kCfg};
  REQUIRE_THROWS_AS(evolve(p, ec), std::invalid_argument);
}

TEST_CASE("expectation of a zero packet is rejected") {
  const GridSpec g = grid2d(8, 4.0);
  const WavePacket zero{g, std::vector<Complex>(g.total_points())};
  REQUIRE_THROWS_AS(
      momentum_observable_expectation(zero, [](const FourMomentum&) { return 1.0; }),
      std::domain_error);
}

TEST_CASE("table-driven and direct evolutions agree") {
  const GridSpec g = grid2d(64, 5.0);
  const WavePacket p = make_gaussian_packet(g, {{1.5, 0.5, 0.0, 0.0}}, {0.625, 0.625});
  const double diff =
      compare_symbols(p, 0.5, ExactSymbol{&hull_table()}, DirectSymbol{}, kCfg);
  CHECK(diff < 5e-3);
}

TEST_CASE("packet centroid moves with the symbol gradient") {
  const GridSpec g = grid2d(512, 4.0);
  const WavePacket p = make_gaussian_packet(g, {{3.0, 1.0, 0.0, 0.0}}, {0.0625, 0.0625});
  const PositionField f = to_position(p);
  CHECK(edge_mass_fraction(f) < 1e-9);

  EvolutionConfig ec{ExactSymbol{&hull_table()}, 0.0, kCfg};
  const GroupVelocityReport rep = group_velocity_check(p, ec, 0.5);
  REQUIRE(rep.predicted.size() == 2);
  CHECK(rep.rel_err < 0.05);
  // Time components: positive velocity along increasing xi_0.
  CHECK(rep.predicted[0] > 0.0);
  CHECK(rep.measured[0] > 0.0);
  // Spatial component: the symbol decreases away from the axis.
  CHECK(rep.predicted[1] < 0.0);
  CHECK(rep.measured[1] < 0.0);

  REQUIRE_THROWS_AS(group_velocity_check(p, ec, 0.0), std::domain_error);
}

TEST_CASE("the leading-term error shrinks deeper inside the cone") {
  // Packets along the ray (2, 1) scaled by t, evolved for tau = 1/t^2 so
  // the leading-term phase is t-independent; the residual phase scales
  // like 1/t^2, so the discrepancy should drop about 16x from t=2 to t=8.
  const GridSpec g = grid2d(256, 20.0);
  double disc2 = 0.0, disc8 = 0.0;
  for (double t : {2.0, 8.0}) {
    const WavePacket p = make_gaussian_packet(g, {{2.0 * t, t, 0.0, 0.0}}, {0.7, 0.7});
    const double tau = 1.0 / (t * t);
    const double disc = compare_symbols(p, tau, DirectSymbol{}, ApproxSymbol{true}, kCfg);
    (t == 2.0 ? disc2 : disc8) = disc;
  }
  CHECK(disc2 > 0.0);
  CHECK(disc2 < 0.2);
  CHECK(disc8 < disc2);
  CHECK(disc2 / disc8 > 8.0);
  CHECK(disc2 / disc8 < 32.0);
}

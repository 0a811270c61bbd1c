#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpq/algebra.hpp"

using namespace tpq::algebra;

namespace {
Matrix2 zero() { return {}; }
}  // namespace

TEST_CASE("spin parameter accepts [0,1] and rejects the rest") {
  REQUIRE_NOTHROW(SpinParameter(0.0));
  REQUIRE_NOTHROW(SpinParameter(1.0));
  REQUIRE_NOTHROW(SpinParameter(0.357));
  REQUIRE_THROWS_AS(SpinParameter(-1e-9), std::domain_error);
  REQUIRE_THROWS_AS(SpinParameter(1.0 + 1e-9), std::domain_error);
}

TEST_CASE("both generators are symmetric idempotents for every p") {
  for (double pv : {0.0, 0.125, 0.25, 0.5, 0.8, 1.0}) {
    const SpinParameter p(pv);
    const Matrix2 q = rep_pq(p);
    const Matrix2 r = rep_pr();
    CHECK((q * q - q).max_abs_diff(zero()) < 1e-15);
    CHECK((r * r - r).max_abs_diff(zero()) < 1e-15);
    CHECK(q.is_symmetric(1e-15));
    CHECK(r.is_symmetric(1e-15));
  }
}

TEST_CASE("squared difference of the generators is p times the identity") {
  for (double pv : {0.0, 0.1, 0.3, 0.5, 0.77, 1.0}) {
    CHECK(difference_squared_value(SpinParameter(pv)) == Catch::Approx(pv).margin(1e-12));
  }
}

TEST_CASE("generator sum at the three distinguished parameters is exact") {
  const Matrix2 s0 = observable_sum(SpinParameter(0.0));
  const Matrix2 sh = observable_sum(SpinParameter(0.5));
  const Matrix2 s1 = observable_sum(SpinParameter(1.0));
  CHECK(s0.a == std::array<std::array<double, 2>, 2>{{{2.0, 0.0}, {0.0, 0.0}}});
  CHECK(sh.a == std::array<std::array<double, 2>, 2>{{{1.5, 0.5}, {0.5, 0.5}}});
  CHECK(s1.a == std::array<std::array<double, 2>, 2>{{{1.0, 0.0}, {0.0, 1.0}}});
}

TEST_CASE("spin classification by parameter") {
  const SpinClass scalar = classify_spin(SpinParameter(0.0));
  CHECK(scalar.variant == SpinVariant::Scalar);
  CHECK(scalar.representation_dimension == 1);
  CHECK_FALSE(scalar.reducible);

  const SpinClass spinor = classify_spin(SpinParameter(0.3));
  CHECK(spinor.variant == SpinVariant::Spinor);
  CHECK(spinor.representation_dimension == 2);
  CHECK_FALSE(spinor.reducible);

  const SpinClass vector = classify_spin(SpinParameter(1.0));
  CHECK(vector.variant == SpinVariant::Vector);
  CHECK(vector.representation_dimension == 2);
  CHECK(vector.reducible);

  // Endpoint snapping at 1e-12.
  CHECK(classify_spin(SpinParameter(1e-13)).variant == SpinVariant::Scalar);
  CHECK(classify_spin(SpinParameter(1.0 - 1e-13)).variant == SpinVariant::Vector);
  CHECK(classify_spin(SpinParameter(1e-11)).variant == SpinVariant::Spinor);

  CHECK(std::string(to_string(SpinVariant::Scalar)) == "scalar");
  CHECK(std::string(to_string(SpinVariant::Spinor)) == "spinor");
  CHECK(std::string(to_string(SpinVariant::Vector)) == "vector");
}

TEST_CASE("commutator norm peaks at one half and vanishes at the endpoints") {
  CHECK(commutator_norm(SpinParameter(0.0)) == Catch::Approx(0.0).margin(1e-15));
  CHECK(commutator_norm(SpinParameter(1.0)) == Catch::Approx(0.0).margin(1e-15));
  CHECK(commutator_norm(SpinParameter(0.5)) ==
        Catch::Approx(0.70710678118654752).margin(1e-15));
  // sqrt(2 p (1-p)) in general
  CHECK(commutator_norm(SpinParameter(0.2)) ==
        Catch::Approx(std::sqrt(2.0 * 0.2 * 0.8)).margin(1e-15));
}

TEST_CASE("word representation multiplies generators in order") {
  const SpinParameter half(0.5);
  const std::vector<Letter> qrq{Letter::Q, Letter::R, Letter::Q};
  const Matrix2 w = represent_word(qrq, half);
  for (const auto& row : w.a)
    for (double v : row) CHECK(v == Catch::Approx(0.25).margin(1e-15));

  const std::vector<Letter> single{Letter::R};
  CHECK(represent_word(single, half).max_abs_diff(rep_pr()) == 0.0);

  const std::vector<Letter> empty;
  REQUIRE_THROWS_AS(represent_word(empty, half), std::domain_error);
}

TEST_CASE("propagation type restricts the admissible spin classes") {
  const auto luminal = classify_propagation(true);
  REQUIRE(luminal.size() == 1);
  CHECK(luminal[0].variant == SpinVariant::Vector);

  const auto general = classify_propagation(false);
  REQUIRE(general.size() == 3);
  CHECK(general[0].variant == SpinVariant::Scalar);
  CHECK(general[1].variant == SpinVariant::Spinor);
  CHECK(general[2].variant == SpinVariant::Vector);
}

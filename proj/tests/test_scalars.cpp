#include <doctest.h>

#include <cmath>
#include <numbers>
#include <limits>
#include <random>

#include "support.hpp"

using namespace althecke;

TEST_CASE("quantum integers: pinned values") {
  const Scalar z5 = std::polar(1.0, 2 * std::numbers::pi / 5);
  CHECK(quantum_int(0, z5) == Scalar{});
  CHECK(quantum_int(3, 1.0) == Scalar{3.0, 0.0});
  CHECK(approx_eq(quantum_int(2, z5), 1.0 + z5, 1e-14));
  CHECK(approx_eq(quantum_int(-2, 1.0), -2.0, 1e-14));
}

TEST_CASE("quantum integers agree with the closed form and the reflection identity") {
  for (int e : {3, 5, 7, 11}) {
    for (int j = 1; j < e; ++j) {
      if (std::gcd(j, e) != 1) continue;
      const auto p = AlgebraParams::root_of_unity(3, {0}, e, j);
      for (int k = -12; k <= 12; ++k) {
        const Scalar closed = (std::pow(p.xi, k) - 1.0) / (p.xi - 1.0);
        CHECK(approx_eq(p.qint(k), closed, 1e-12));
        CHECK(approx_eq(quantum_int(k, p.xi), p.qint(k), 1e-12));
        // [-k] = -xi^{-k} [k]
        CHECK(approx_eq(p.qint(-k), -p.xi_pow(-k) * p.qint(k), 1e-12));
        CHECK((std::abs(p.qint(k)) < 1e-12) == (k % e == 0));
      }
    }
  }
}

TEST_CASE("conventional square roots") {
  const auto one = AlgebraParams::unit(4, {0});
  CHECK(approx_eq(sqrt_conventional(1, one), 1.0, 1e-14));
  CHECK(approx_eq(sqrt_conventional(3, one), std::sqrt(3.0), 1e-14));
  CHECK(approx_eq(sqrt_conventional(-3, one), Scalar{0.0, std::sqrt(3.0)}, 1e-14));
  CHECK_THROWS_AS(sqrt_conventional(0, one), DomainError);
  const auto e3 = AlgebraParams::root_of_unity(4, {0}, 3);
  CHECK_THROWS_AS(sqrt_conventional(3, e3), DomainError);
  CHECK_THROWS_AS(sqrt_conventional(-3, e3), DomainError);

  for (int e : {5, 7, 9, 13}) {
    const auto p = AlgebraParams::root_of_unity(6, {0}, e, 2);
    for (int h = -6; h <= 6; ++h) {
      if (h == 0 || h % e == 0) continue;
      const Scalar s = sqrt_conventional(h, p);
      CHECK(approx_eq(s * s, p.qint(h), 1e-12));
    }
  }
}

TEST_CASE("approximate equality policy") {
  CHECK(approx_eq(1.0, 1.0 + 1e-12, 1e-8));
  CHECK_FALSE(approx_eq(0.0, 1e-7, 1e-8));
  CHECK(approx_eq(1e6, 1e6 * (1 + 1e-9), 1e-8));
  CHECK_FALSE(approx_eq(1e6, 1e6 * (1 + 1e-7), 1e-8));
}

TEST_CASE("parameter validation and helpers") {
  CHECK_THROWS_AS(AlgebraParams::root_of_unity(3, {0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraParams::root_of_unity(3, {0}, 6, 2), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraParams::unit(3, {}), std::invalid_argument);
  const auto p = AlgebraParams::root_of_unity(3, {1, -1}, 7);
  CHECK(p.symmetric_kappa());
  CHECK(p.conjugate_kappa() == std::vector<int>{1, -1});
  const auto q = AlgebraParams::root_of_unity(3, {1, 0}, 7);
  CHECK_FALSE(q.symmetric_kappa());
  CHECK(q.conjugate_kappa() == std::vector<int>{0, -1});
  CHECK(p.algebra_dimension() == 48);
  CHECK(p.residue(-3) == 4);
  CHECK(p.neg_residue(2) == 5);
  CHECK(AlgebraParams::unit(30, {0, 0, 0}).algebra_dimension() == std::numeric_limits<long long>::max());
}

TEST_CASE("property: xi^e = 1 exactly on the unit circle and xi_pow is periodic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick_e(3, 40), pick_k(-100, 100);
  for (int trial = 0; trial < 200; ++trial) {
    const int e = pick_e(rng);
    int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(e - 1));
    while (std::gcd(j, e) != 1) j = 1 + static_cast<int>(rng() % static_cast<unsigned>(e - 1));
    const auto p = AlgebraParams::root_of_unity(2, {0}, e, j);
    const int k = pick_k(rng);
    CHECK(approx_eq(p.xi_pow(k), p.xi_pow(k + e), 1e-13));
    CHECK(approx_eq(p.xi_pow(k), std::pow(p.xi, k), 1e-10));
    CHECK(approx_eq(p.sqrt_xi * p.sqrt_xi, p.xi, 1e-14));
  }
}

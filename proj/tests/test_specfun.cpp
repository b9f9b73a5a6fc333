#include <cmath>
#include <limits>

#include "doctest.h"
#include "gpscale/error.hpp"
#include "gpscale/specfun.hpp"
#include "oracles.hpp"

using namespace gpscale;
namespace sf = gpscale::specfun;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("gamma at simple points") {
  CHECK(sf::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel(sf::gamma(0.5), std::sqrt(M_PI)) < 1e-15);
  // Frozen from the integral oracle (and 20-digit arithmetic: 2.54925696671852928).
  CHECK(rel(sf::gamma(3.25), 2.5492569667185293) < 1e-14);
  CHECK(rel(sf::gamma(3.25), oracle::gamma(3.25)) < 1e-13);
}

TEST_CASE("gamma against the integral oracle") {
  for (double x = 0.05; x <= 50.0; x += 0.45) {
    CAPTURE(x);
    CHECK(rel(sf::gamma(x), oracle::gamma(x)) < 1e-13);
  }
}

TEST_CASE("gamma recurrence") {
  for (double x = 0.01; x <= 20.0; x += 0.173) {
    CAPTURE(x);
    CHECK(rel(sf::gamma(x + 1.0), x * sf::gamma(x)) < 1e-12);
  }
}

TEST_CASE("gamma domain") {
  CHECK_THROWS_AS(sf::gamma(0.0), DomainError);
  CHECK_THROWS_AS(sf::gamma(-1.5), DomainError);
  CHECK_THROWS_AS(sf::gamma(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(sf::gamma(std::nan("")), DomainError);
}

TEST_CASE("bessel_k closed forms") {
  const auto k05 = sf::bessel_k(0.5, 1.0);
  CHECK(k05.ok());
  CHECK(rel(k05.value, std::sqrt(M_PI / 2.0) * std::exp(-1.0)) < 1e-14);
  // sqrt(pi/4) e^-2 (1 + 1/2) = 0.179906657952092...
  CHECK(rel(sf::bessel_k(1.5, 2.0).value, 0.17990665795209217) < 1e-14);
  CHECK(rel(sf::bessel_k(0.25, 2.0).value, 0.11537827684085676) < 1e-13);
  CHECK(rel(sf::bessel_k(0.25, 2.0).value, oracle::bessel_k(0.25, 2.0)) < 1e-12);
}

TEST_CASE("bessel_k half-integer orders") {
  for (int p = 0; p <= 3; ++p) {
    for (double x : {1e-3, 0.07, 0.5, 1.0, 1.99, 2.0, 3.7, 12.0, 45.0}) {
      CAPTURE(p);
      CAPTURE(x);
      CHECK(rel(sf::bessel_k(p + 0.5, x).value, oracle::bessel_k_half_integer(p, x)) < 1e-12);
    }
  }
}

TEST_CASE("bessel_k against the integral oracle") {
  for (double nu : {0.01, 0.25, 0.5, 0.75, 1.0, 1.3, 2.0, 2.5, 3.999, 5.2, 8.0}) {
    for (double x : {1e-3, 0.01, 0.3, 1.0, 1.999, 2.0, 2.001, 5.0, 17.0, 60.0}) {
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(rel(sf::bessel_k(nu, x).value, oracle::bessel_k(nu, x)) < 1e-10);
    }
  }
}

TEST_CASE("bessel_k recurrence") {
  for (double nu = 1.01; nu <= 6.0; nu += 0.37) {
    for (double x = 0.1; x <= 20.0; x *= 1.6) {
      const double lhs = sf::bessel_k(nu + 1.0, x).value;
      const double rhs = sf::bessel_k(nu - 1.0, x).value +
                         2.0 * nu / x * sf::bessel_k(nu, x).value;
      CAPTURE(nu);
      CAPTURE(x);
      CHECK(rel(lhs, rhs) < 1e-9);
    }
  }
}

TEST_CASE("bessel_k is decreasing in x") {
  for (double nu : {0.1, 0.5, 1.0, 2.75, 7.5}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double x = 1e-3; x < 60.0; x *= 1.1) {
      const double v = sf::bessel_k(nu, x).value;
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("bessel_k underflow and overflow are flagged") {
  const auto far = sf::bessel_k(0.5, 800.0);
  CHECK(far.flag == sf::SpecFunFlag::underflow_to_zero);
  CHECK(far.value == 0.0);
  const auto big = sf::bessel_k(200.0, 1e-3);
  CHECK(big.flag == sf::SpecFunFlag::overflow);
  CHECK(std::isinf(big.value));
}

TEST_CASE("bessel_k domain") {
  CHECK_THROWS_AS(sf::bessel_k(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(sf::bessel_k(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(sf::bessel_k(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(sf::bessel_k(1.0, std::nan("")), DomainError);
}

TEST_CASE("normal quantile") {
  CHECK(sf::inv_norm_cdf(0.5) == 0.0);
  CHECK(std::abs(sf::inv_norm_cdf(0.975) - 1.9599639845400538) < 1e-14);
  CHECK(std::abs(sf::inv_norm_cdf(0.975) - oracle::inv_norm_cdf(0.975)) < 1e-14);
  CHECK(std::abs(sf::inv_norm_cdf(0.025) + sf::inv_norm_cdf(0.975)) < 1e-12);
  for (double p : {1e-12, 1e-6, 0.001, 0.02425, 0.1, 0.3, 0.5, 0.77, 0.97575, 0.999, 1 - 1e-9}) {
    CAPTURE(p);
    CHECK(std::abs(sf::norm_cdf(sf::inv_norm_cdf(p)) - p) <= 1e-12);
  }
  // p and 1 - p both exact in binary.
  for (int k = 1; k < 1024; ++k) {
    const double p = k / 1024.0;
    CAPTURE(p);
    CHECK(std::abs(sf::inv_norm_cdf(p) + sf::inv_norm_cdf(1.0 - p)) <= 1e-12);
  }
  CHECK_THROWS_AS(sf::inv_norm_cdf(0.0), DomainError);
  CHECK_THROWS_AS(sf::inv_norm_cdf(1.0), DomainError);
  CHECK_THROWS_AS(sf::inv_norm_cdf(1.5), DomainError);
}

TEST_CASE("normal cdf") {
  CHECK(sf::norm_cdf(0.0) == 0.5);
  CHECK(sf::norm_cdf(1.3) + sf::norm_cdf(-1.3) == doctest::Approx(1.0).epsilon(1e-15));
}

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/jacobi_elliptic.hpp>

#include "xyz/elliptic.hpp"

using namespace xyz;

namespace {

// K(k) by trapezoid rule on the periodic integrand, which converges
// geometrically.
double quadrature_k(double k) {
  const int m = 400;
  double s = 0;
  for (int i = 0; i < m; ++i) {
    const double t = std::numbers::pi * (i + 0.5) / m;
    const double sn = std::sin(t / 2);
    s += 1 / std::sqrt(1 - k * k * sn * sn);
  }
  return s * std::numbers::pi / m / 2;
}

}  // namespace

TEST_CASE("complete elliptic integral") {
  CHECK(complete_elliptic_k(0) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  for (double k : {0.05, 0.1, 0.3, 0.6, 0.9, 0.99}) {
    CHECK(std::abs(complete_elliptic_k(k) - boost::math::ellint_1(k)) < 1e-13);
    if (k < 0.95) CHECK(std::abs(complete_elliptic_k(k) - quadrature_k(k)) < 1e-12);
  }
  CHECK_THROWS_AS(complete_elliptic_k(1.0), std::invalid_argument);
  CHECK_THROWS_AS(complete_elliptic_k(-0.1), std::invalid_argument);
}

TEST_CASE("jacobi functions") {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> u(-6, 6);
  for (double k : {0.0, 0.1, 0.3, 0.6, 0.9}) {
    for (int i = 0; i < 50; ++i) {
      const double x = u(rng);
      double cn = 0, dn = 0;
      const double sn = boost::math::jacobi_elliptic(k, x, &cn, &dn);
      const JacobiValues j = jacobi_functions(x, k);
      CHECK(std::abs(j.sn - sn) < 1e-12);
      CHECK(std::abs(j.cn - cn) < 1e-12);
      CHECK(std::abs(j.dn - dn) < 1e-12);
    }
  }
}

TEST_CASE("parameters and the trigonometric limit") {
  const EllipticParams p = make_params(0.3);
  CHECK(p.eta == doctest::Approx(2 * p.bigk / 3));
  CHECK(p.kprime == doctest::Approx(std::sqrt(1 - 0.09)));
  CHECK(p.nome_q > 0);
  CHECK(p.nome_q < 0.01);
  const EllipticParams z = make_params(0);
  CHECK(z.trigonometric());
  CHECK(std::isinf(z.bigkprime));
  CHECK(z.nome_q == 0);
  CHECK(theta_functions(0.7, z).h == doctest::Approx(std::sin(0.7)));
  CHECK(theta_functions(0.7, z).theta == 1);
  CHECK(weights(0.4, z).d == 0);
  CHECK_THROWS_AS(make_params(1.5), std::invalid_argument);
  CHECK(make_params(0.3, EtaChoice::minus_four_thirds).eta == doctest::Approx(-4 * p.bigk / 3));
  CHECK(to_string(EtaChoice::minus_two_thirds) == "-2K/3");
}

TEST_CASE("theta quotient reproduces sn") {
  for (double k : {0.1, 0.3, 0.6}) {
    const EllipticParams p = make_params(k);
    for (double v : {0.1, 0.5, 1.3, 2.2, -0.9}) {
      const ThetaValues t = theta_functions(v, p);
      CHECK(std::abs(t.h / (std::sqrt(k) * t.theta) - jacobi_functions(v, k).sn) < 1e-12);
    }
  }
}

TEST_CASE("symmetric parameter and condition residual") {
  for (double k : {0.0, 0.1, 0.3, 0.6, 0.9}) {
    // alpha(k) stays in [0, 1).
    const double a = alpha_of_k(k);
    CHECK(a >= 0);
    CHECK(a < 1);
    for (EtaChoice c : {EtaChoice::plus_two_thirds, EtaChoice::minus_two_thirds, EtaChoice::plus_four_thirds,
                        EtaChoice::minus_four_thirds}) {
      CHECK(std::abs(condition_residual(make_params(k, c))) < 1e-12);
    }
  }
  CHECK(alpha_of_k(0.3) < alpha_of_k(0.6));
}

TEST_CASE("weight derivatives against an analytic trigonometric form") {
  const EllipticParams p = make_params(0);
  const double v = 0.8;
  const BoltzmannWeights d = weight_derivatives(v, p);
  // a = sin(v + eta), b = sin(v - eta), c = sin(2 eta) at k = 0.
  CHECK(d.a == doctest::Approx(std::cos(v + p.eta)).epsilon(1e-9));
  CHECK(d.b == doctest::Approx(std::cos(v - p.eta)).epsilon(1e-9));
  CHECK(std::abs(d.c) < 1e-9);
  CHECK(phi(v, p) == doctest::Approx(std::sin(v)));
}

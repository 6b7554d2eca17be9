#include "xyz/elliptic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace xyz {

namespace {

void require_modulus(double k) {
  if (!(k >= 0 && k < 1)) {
    throw std::invalid_argument("elliptic modulus must satisfy 0 <= k < 1, got " + std::to_string(k));
  }
}

double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double an = (a + b) / 2;
    b = std::sqrt(a * b);
    a = an;
  }
  return (a + b) / 2;
}

double eta_of(EtaChoice c, double bigk) {
  switch (c) {
    case EtaChoice::plus_two_thirds: return 2 * bigk / 3;
    case EtaChoice::minus_two_thirds: return -2 * bigk / 3;
    case EtaChoice::plus_four_thirds: return 4 * bigk / 3;
    case EtaChoice::minus_four_thirds: return -4 * bigk / 3;
  }
  throw std::logic_error("unknown eta choice");
}

}  // namespace

double complete_elliptic_k(double k) {
  require_modulus(k);
  return std::numbers::pi / (2 * agm(1.0, std::sqrt((1 - k) * (1 + k))));
}

JacobiValues jacobi_functions(double u, double k) {
  require_modulus(k);
  if (k == 0) return {std::sin(u), std::cos(u), 1.0};
  std::vector<double> a{1.0}, c{k};
  double b = std::sqrt((1 - k) * (1 + k));
  while (std::abs(c.back()) > 1e-17 && a.size() < 64) {
    const double an = (a.back() + b) / 2;
    const double cn = (a.back() - b) / 2;
    b = std::sqrt(a.back() * b);
    a.push_back(an);
    c.push_back(cn);
  }
  const std::size_t last = a.size() - 1;
  double ph = std::ldexp(a[last] * u, static_cast<int>(last));
  for (std::size_t n = last; n > 0; --n) ph = (ph + std::asin(c[n] / a[n] * std::sin(ph))) / 2;
  const double sn = std::sin(ph);
  return {sn, std::cos(ph), std::sqrt(1 - k * k * sn * sn)};
}

std::string to_string(EtaChoice e) {
  switch (e) {
    case EtaChoice::plus_two_thirds: return "2K/3";
    case EtaChoice::minus_two_thirds: return "-2K/3";
    case EtaChoice::plus_four_thirds: return "4K/3";
    case EtaChoice::minus_four_thirds: return "-4K/3";
  }
  return "?";
}

EllipticParams make_params(double k, EtaChoice choice, double rho) {
  require_modulus(k);
  EllipticParams p;
  p.k = k;
  p.kprime = std::sqrt((1 - k) * (1 + k));
  p.bigk = complete_elliptic_k(k);
  if (k == 0) {
    p.bigkprime = std::numeric_limits<double>::infinity();
    p.nome_q = 0;
  } else {
    p.bigkprime = complete_elliptic_k(p.kprime);
    p.nome_q = std::exp(-std::numbers::pi * p.bigkprime / p.bigk);
  }
  p.choice = choice;
  p.eta = eta_of(choice, p.bigk);
  p.rho = rho;
  return p;
}

ThetaValues theta_functions(double v, const EllipticParams& p) {
  if (p.trigonometric()) return {std::sin(v), 1.0};
  const double q = p.nome_q;
  const double w = std::numbers::pi * v / (2 * p.bigk);
  double h = 0, th = 1;
  for (int n = 0; n < 200; ++n) {
    const double x = n + 0.5;
    const double term = std::pow(q, x * x);
    if (n > 0 && term < 1e-17 * std::pow(q, 0.25)) break;
    h += (n % 2 ? -1.0 : 1.0) * term * std::sin((2 * n + 1) * w);
  }
  for (int n = 1; n < 200; ++n) {
    const double term = std::pow(q, static_cast<double>(n) * n);
    if (term < 1e-17) break;
    th += 2 * (n % 2 ? -1.0 : 1.0) * term * std::cos(2 * n * w);
  }
  return {2 * h, th};
}

BoltzmannWeights weights(double v, const EllipticParams& p) {
  const ThetaValues two = theta_functions(2 * p.eta, p);
  const ThetaValues minus = theta_functions(v - p.eta, p);
  const ThetaValues plus = theta_functions(v + p.eta, p);
  BoltzmannWeights w;
  w.a = p.rho * two.theta * minus.theta * plus.h;
  w.b = p.rho * two.theta * minus.h * plus.theta;
  w.c = p.rho * two.h * minus.theta * plus.theta;
  w.d = p.trigonometric() ? 0.0 : p.rho * two.h * minus.h * plus.h;
  return w;
}

BoltzmannWeights weight_derivatives(double v, const EllipticParams& p, double h) {
  const BoltzmannWeights up = weights(v + h, p);
  const BoltzmannWeights down = weights(v - h, p);
  return {(up.a - down.a) / (2 * h), (up.b - down.b) / (2 * h), (up.c - down.c) / (2 * h),
          (up.d - down.d) / (2 * h)};
}

double phi(double v, const EllipticParams& p) {
  const ThetaValues zero = theta_functions(0, p);
  const ThetaValues at = theta_functions(v, p);
  return p.rho * zero.theta * at.h * at.theta;
}

double alpha_of_k(double k) {
  const double bigk = complete_elliptic_k(k);
  const double sn = jacobi_functions(4 * bigk / 3, k).sn;
  return k * sn * sn;
}

double condition_residual(const EllipticParams& p) {
  const JacobiValues j = jacobi_functions(2 * p.eta, p.k);
  return 1 - p.k * p.k * std::pow(j.sn, 4) + 2 * j.cn * j.dn;
}

}  // namespace xyz

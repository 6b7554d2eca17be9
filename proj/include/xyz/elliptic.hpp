#pragma once

#include <string>

namespace xyz {

// K(k) = pi / (2 AGM(1, k')), 0 <= k < 1.
double complete_elliptic_k(double k);

struct JacobiValues {
  double sn, cn, dn;
};

// sn, cn, dn of real argument by descending AGM (Gauss transformation).
JacobiValues jacobi_functions(double u, double k);

enum class EtaChoice { plus_two_thirds, minus_two_thirds, plus_four_thirds, minus_four_thirds };

std::string to_string(EtaChoice e);

// Fixed parameters of the weights. k = 0 is the trigonometric limit: H is
// replaced by lim H/sqrt(k) = sin, Theta by 1, and d vanishes.
struct EllipticParams {
  double k = 0;
  double kprime = 1;
  double bigk = 0;
  double bigkprime = 0;  // +inf at k = 0
  double nome_q = 0;
  double eta = 0;
  double rho = 1;
  EtaChoice choice = EtaChoice::plus_two_thirds;

  bool trigonometric() const { return k == 0; }
};

// Throws std::invalid_argument unless 0 <= k < 1.
EllipticParams make_params(double k, EtaChoice choice = EtaChoice::plus_two_thirds, double rho = 1);

struct ThetaValues {
  double h, theta;
};

// H(v) = 2 sum (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v / 2K),
// Theta(v) = 1 + 2 sum (-1)^n q^{n^2} cos(n pi v / K).
ThetaValues theta_functions(double v, const EllipticParams& p);

struct BoltzmannWeights {
  double a, b, c, d;
};

BoltzmannWeights weights(double v, const EllipticParams& p);

// Central differences, step h.
BoltzmannWeights weight_derivatives(double v, const EllipticParams& p, double h = 1e-5);

// rho Theta(0) H(v) Theta(v).
double phi(double v, const EllipticParams& p);

// k sn^2(2 eta) at eta = 2K/3.
double alpha_of_k(double k);

// 1 - k^2 sn^4(2 eta) + 2 cn(2 eta) dn(2 eta).
double condition_residual(const EllipticParams& p);

}  // namespace xyz

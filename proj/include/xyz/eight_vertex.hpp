#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "xyz/elliptic.hpp"
#include "xyz/ground_state.hpp"
#include "xyz/report.hpp"

namespace xyz {

inline constexpr int kMaxTransferLength = 9;

// Row-to-row transfer matrix Tr_aux(M_1 ... M_N) with
// M_j(nu, mu)_{beta, alpha} = R_j[(beta nu), (alpha mu)] and
// R = [[a,0,0,d],[0,b,c,0],[0,c,b,0],[d,0,0,a]] in the (aux, site) basis.
// Site j uses spectral argument v - v_j; an empty list means all v_j = 0.
// At v = eta, T = a(eta)^N S.
Eigen::MatrixXd transfer_matrix(double v, const EllipticParams& p, int n,
                                std::span<const double> inhomogeneities = {});

// a(eta)^{-(N-1)} T(v | 0, v - eta, ..., v - eta).
Eigen::MatrixXd defect_shift(double v, const EllipticParams& p, int n);

// Double-precision full 2^N vector of the polynomial eigenvector (even sector).
Eigen::VectorXd numeric_vector(const GroundStateVector& g, double alpha);

// Right null vector of m restricted to the given parity sector, by SVD; also
// returns the two smallest singular values relative to the largest.
struct SectorNullvector {
  Eigen::VectorXd vector;  // full 2^N, unit norm
  double smallest = 0;
  double next = 0;
};
SectorNullvector sector_nullvector(const Eigen::MatrixXd& m, int n, Parity parity);

struct EllipticTolerances {
  double theta = 1e-12;         // theta periodicity, sn = H/(sqrt(k) Theta), Jacobi identities
  double identity = 1e-10;      // weight invariants, elegant condition, inversion relation
  double condition = 1e-12;     // condition residual
  double commutation = 1e-10;
  double eigenvalue = 1e-8;
  double derivative = 1e-7;     // derivative relations at v = eta
  double couplings = 1e-6;
  double link = 1e-5;           // logarithmic derivative link
  double defect_ratio = 1e-8;
  double extrapolation = 1e-6;  // v -> eta limit of the defect ratio
  double step = 1e-5;           // central differences
};

json to_json(const EllipticTolerances& t);

// Checks at fixed parameters; `seed` drives the random spectral points.
Check check_theta_identities(const EllipticParams& p, unsigned seed, const EllipticTolerances& t = {});
Check check_weight_invariants(const EllipticParams& p, unsigned seed, const EllipticTolerances& t = {});
Check check_condition(const EllipticParams& p, const EllipticTolerances& t = {});
Check check_derivative_relations(const EllipticParams& p, const EllipticTolerances& t = {});
Check check_couplings(const EllipticParams& p, const EllipticTolerances& t = {});
Check check_inversion(const EllipticParams& p, int n, unsigned seed, const EllipticTolerances& t = {});
// (a + b)/phi for every crossing-parameter choice at modulus k.
Check check_inversion_signs(double k, unsigned seed, const EllipticTolerances& t = {});
Check check_commutation(const EllipticParams& p, int n, unsigned seed, const EllipticTolerances& t = {});
// T(v) Psi(alpha(k)) = (a(v) + b(v))^N Psi(alpha(k)) at 5 random v.
Check check_eigenvalue(const EllipticParams& p, const GroundStateVector& g, unsigned seed,
                       const EllipticTolerances& t = {});
// Common eigenvector of T(v | v_1..v_N) with eigenvalue prod_j (a + b)(v - v_j).
Check check_inhomogeneous(const EllipticParams& p, int n, unsigned seed, const EllipticTolerances& t = {});
Check check_hamiltonian_link(const EllipticParams& p, int n, const EllipticTolerances& t = {});
// U(eta) = S, the two-term relations of the defect eigenvector, the summed ratio
// against (d - b)/(a - c) and its v -> eta limit 2/(alpha + 1).
Check check_defect_equations(const EllipticParams& p, int n, const EllipticTolerances& t = {});

struct EllipticSuite {
  double k = 0;
  int n = 3;
  EtaChoice choice = EtaChoice::plus_two_thirds;
  unsigned seed = 1;
  EllipticTolerances tolerances;
};

// Every check above at one k; eigenvalue and defect checks use the chain length n.
std::vector<Check> run_elliptic_suite(const EllipticSuite& s);

}  // namespace xyz

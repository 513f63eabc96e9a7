#pragma once

#include "rho/homology.hpp"
#include "rho/report.hpp"

namespace rho {

enum class BigMatrixKind { A, Aprime, M, Mprime };

// The single matrices whose determinants reproduce the graded character sum:
// (n+k) x (n+k) for type A in the ring (t, x_1..x_n), m x m for BCD in the
// ring (t, y_1..y_n) with rows evaluated at the z-vector. The primed
// variants carry the truncated geometric sums that expose the (1+t) factors
// (with the empty-sum-is-zero convention).
PolyMatrix build_matrix(BigMatrixKind which, const TypeAParams& p);
PolyMatrix build_matrix(BigMatrixKind which, const BCDParams& p);

// Checks both determinantal identities: the subset-sum character against
// det(A)/det(M) with the stated prefactors, and det = (1+t)^{k or n} times
// the primed determinant.
VerdictReport verify_det_form(const TypeAParams& p);
VerdictReport verify_det_form(const BCDParams& p);

// Exact division of the graded character by (1+t)^k resp. (1+t)^n; returns
// the quotient on success, the remainder witness on failure.
std::pair<VerdictReport, LaurentPoly> verify_divisibility(const TypeAParams& p);
std::pair<VerdictReport, LaurentPoly> verify_divisibility(const BCDParams& p);

// Type A: sum over |T| = i equals binom(k, q-i) times the full-odd block for
// every i, all blocks equal when k = n, vanishing below q-k, the Moebius
// alternating sums for |T0| < k, and H(t=1) = 2^k x full-odd block.
// BCD: pairwise equality of all blocks and H(z;1) = 2^n x block(empty).
VerdictReport verify_equidistribution(const TypeAParams& p);
VerdictReport verify_equidistribution(const BCDParams& p);

// H(t=1) against the stated power of 2 times the product of the two
// staircase characters. Type A with k not in {n-1, n} yields a skip verdict.
VerdictReport verify_factorization(const TypeAParams& p);
VerdictReport verify_factorization(const BCDParams& p);

struct DimensionReport {
  Rat value;                 // closed-form total dimension
  int two_exponent = 0;      // the 2^{..} prefactor of the rho-product form
  Rat dim_top, dim_bot;      // the two staircase dimensions
  std::optional<Rat> c_lambda;  // value / 2^{dim n_-} (abelian families)
  std::optional<Rat> xi1, xi2, theta;  // BCD breakdown pieces
  VerdictReport verdict;     // closed form vs Betti-table grand total
};

// Evaluates the closed-form product exactly, cross-checks it against the
// term-by-term Betti total (Pin-level sum for family D), and reports the
// breakdown. Type A requires k in {n-1, n}.
DimensionReport total_dimension(const TypeAParams& p);
DimensionReport total_dimension(const BCDParams& p);

// Named special-case checks.
//  gkt_closed_form(m): the 2-step nilpotent total character equals both the
//    self-conjugate partition sum and the displayed staircase product.
//  kostant_rho_even(m), m even / kostant_rho_odd(m), m odd: the lambda = 0
//    family-D even component equals 2^n x (staircase character)^2.
//  efw_pure(e1..en): the k = 1 type A table is pure with the given jumps.
//  cauchy_lambda0(n): lambda = 0, k = n terms match the box partitions.
VerdictReport special_gkt_closed_form(int m);
VerdictReport special_kostant_rho(int m);
VerdictReport special_efw_pure(const std::vector<int>& degrees);
VerdictReport special_cauchy_lambda0(int n);

// The EFW weight for a pure resolution with degree sequence e_1..e_n.
TypeAParams efw_params(const std::vector<int>& degrees);

}  // namespace rho

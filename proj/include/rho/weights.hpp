#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rho/rational.hpp"
#include "rho/subsets.hpp"

namespace rho {

using WeightVec = std::vector<HalfInt>;

WeightVec weight_of_ints(const std::vector<int>& v);
std::string weight_str(const WeightVec& w);
HalfInt weight_sum(const WeightVec& w);

// gl_{n+k} with Levi gl_n x gl_k, n >= k; lambda has n+k integer entries,
// weakly decreasing.
struct TypeAParams {
  int n = 0, k = 0;
  std::vector<int> lambda;

  int m() const { return n + k; }
  int q() const { return (n + k + 1) / 2; }  // |[n+k]_odd|
};

// Families B (so_{2m+1}, gamma 1/2), C (sp_{2m}, gamma 0), D (so_{2m} /
// Pin_{2m}, gamma 1); lambda has m entries, weakly decreasing, last >= 0,
// all integral or (B, D only) all half-integral.
struct BCDParams {
  Family family = Family::C;
  int m = 0;
  WeightVec lambda;

  int n() const { return m / 2; }
  int eps() const { return m % 2; }
  HalfInt gamma() const;
  int gamma_floor() const { return family == Family::D ? 1 : 0; }
  int zeta() const { return lambda.back().doubled == 0 ? 1 : 0; }
};

using Params = std::variant<TypeAParams, BCDParams>;

std::string family_name(Family f);
std::string params_str(const Params& p);

// Validation rejects non-weakly-decreasing lambda, mixed integer/half-integer
// entries, negative last entry (BCD), and half-integers in family C; each
// violation names the offending index.
TypeAParams validate(const TypeAParams& p);
BCDParams validate(const BCDParams& p);

// (m-1, .., 1, 0)
WeightVec delta_a(int m);
// (m, .., 1) - (gamma, .., gamma)
WeightVec delta_bcd(const BCDParams& p);

struct BetaA {
  WeightVec beta1;  // n entries
  WeightVec beta2;  // k entries
};

// beta1 = (lambda+delta)|_S - delta_n - (k..k), beta2 = (lambda+delta)|_{S^c}
// - delta_k; requires |S| = n.
BetaA beta_type_a(const TypeAParams& p, const SubsetS& s);

struct BetaBCD {
  WeightVec beta;  // m entries
  int sort_sign;   // (-1)^{m|S| + Sigma(S)}
};

// Negate the entries of lambda+delta in positions S, sort decreasingly,
// subtract delta. The sign is that of the sorting permutation.
BetaBCD beta_bcd(const BCDParams& p, const SubsetS& s);

struct RhoWeights {
  WeightVec top;
  WeightVec bot;
};

// Type A requires k in {n-1, n}.
RhoWeights rho_weights(const TypeAParams& p);
RhoWeights rho_weights(const BCDParams& p);

// Internal (twist) degree of the resolution term indexed by S. Zero at the
// minimal subset; strictly increasing along Gale covers.
long internal_degree(const TypeAParams& p, const SubsetS& s);
long internal_degree(const BCDParams& p, const SubsetS& s);

// Homological degree of the term indexed by S.
long hom_degree(const TypeAParams& p, const SubsetS& s);
long hom_degree(const BCDParams& p, const SubsetS& s);

}  // namespace rho

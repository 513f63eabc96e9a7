#pragma once

#include <map>

#include "rho/characters.hpp"
#include "rho/laurent.hpp"
#include "rho/weights.hpp"

namespace rho {

// One summand of the homology decomposition: the indexing subset, its
// homological and internal degrees, the Levi highest weight(s), and the
// exact dimension (a product of closed-form Weyl dimensions).
struct HomologyTerm {
  SubsetS subset;
  long hom_degree = 0;
  long internal_degree = 0;
  std::vector<WeightVec> weights;  // {beta1, beta2} for type A, {beta} else
  Rat dimension;
};

// Which spin component(s) of a family-D decomposition to enumerate. Even
// selects even-size subsets (the component containing the empty set), Both
// is the Pin-level convention covered by the closed formulas. When
// lambda_m = 0 the Pin module is a single orthogonal irreducible and Both
// degenerates to the even component; the odd subsets repeat the same terms.
enum class SpinComponent { Even, Odd, Both };

struct BettiTable {
  Params params;
  SpinComponent component = SpinComponent::Both;
  std::vector<HomologyTerm> terms;  // sorted by (hom, internal, subset)
  std::vector<Rat> totals;          // per homological degree
  Rat grand_total;

  nlohmann::json to_json() const;
};

BettiTable homology_terms(const TypeAParams& p);
BettiTable homology_terms(const BCDParams& p,
                          SpinComponent component = SpinComponent::Both);

// Graded character sum_S char(term_S) t^{hom(S)}, assembled term by term
// from Weyl character quotients (the single-determinant route lives in the
// verifier as an independent oracle). Type A lives in (t, x_1..x_n) for the
// torus acting by (diag(a_1..a_n), diag(a_1..a_k)); BCD lives in
// (t, y_1..y_n) via the z-vector specialization.
//
// Unlike the table builders, this is the combinatorial series over the
// requested subsets with Both meaning all 2^m of them regardless of
// lambda_m; the determinantal and divisibility theorems are statements
// about that full sum.
LaurentPoly graded_character(const TypeAParams& p);
LaurentPoly graded_character(const BCDParams& p,
                             SpinComponent component = SpinComponent::Both);

// Serial reference implementations kept for testing the parallel kernels.
LaurentPoly graded_character_serial(const TypeAParams& p);
LaurentPoly graded_character_serial(const BCDParams& p,
                                    SpinComponent component =
                                        SpinComponent::Both);

// The T-restricted block character (no t-grading): type A sums over subsets
// with S_odd = T inside [n+k]_odd; BCD sums over S_{1-eps} = T.
LaurentPoly restricted_character(const TypeAParams& p, const SubsetS& T);
LaurentPoly restricted_character(const BCDParams& p, const SubsetS& T);

struct Block {
  LaurentPoly chi;
  Rat dimension;
};

// Every admissible block key T with its character and total dimension.
// Module-level like homology_terms: family D at lambda_m = 0 groups the
// even component only.
std::map<SubsetS, Block> blocks(const TypeAParams& p);
std::map<SubsetS, Block> blocks(const BCDParams& p,
                                SpinComponent component = SpinComponent::Both);

// The admissible block keys: subsets of [n+k]_odd resp. [m]_{1-eps}.
std::vector<SubsetS> block_keys(const TypeAParams& p);
std::vector<SubsetS> block_keys(const BCDParams& p);

// Character of a single term, in the same ring as graded_character.
LaurentPoly term_character(const TypeAParams& p, const SubsetS& s);
LaurentPoly term_character(const BCDParams& p, const SubsetS& s);

}  // namespace rho

#pragma once

#include "rho/laurent.hpp"
#include "rho/report.hpp"
#include "rho/weights.hpp"

namespace rho {

// The four bracket determinants. Kinds b and c are the same function under
// different tags; kind d carries the leading 1/2.
enum class BracketKind { A, B, C, D };

// Staircase rho vector of the kind at m variables:
//   A: (m-1,..,0)   B: (m-1/2,..,1/2)   C: (m,..,1)   D: (m-1,..,0)
WeightVec rho_vector(BracketKind kind, int m);

// det(x_i^{alpha_j}), det(x_i^{alpha_j} - x_i^{-alpha_j}), or
// (1/2) det(x_i^{alpha_j} + x_i^{-alpha_j}); ring arity 1+m, t unused.
LaurentPoly bracket_det(BracketKind kind, const WeightVec& alpha, int m);

// Same determinant with variable x_i replaced by the given monomial image
// (all images in a common ring). Used for the z-vector specializations.
LaurentPoly bracket_det_at(BracketKind kind, const WeightVec& alpha,
                           const std::vector<LaurentPoly>& images);

// The monomial images (y_1,..,y_n, y_1^{-1},..,y_n^{-1}[, 1]) of z_1..z_m in
// the ring of arity 1 + floor(m/2).
std::vector<LaurentPoly> z_images(int m);

enum class CharFamily { A, B, C, D, Pin };

// Schur-type quotient s^X_lambda at m variables. Family D includes its
// defining factor 2. Family Pin multiplies s^D by pin_multiplicity; the
// lambda_m = 0 normalization of Pin characters is convention-dependent, so
// every theorem check in this library is phrased via family D with explicit
// powers of 2 instead.
LaurentPoly weyl_char(CharFamily family, const WeightVec& lambda, int m);

int pin_multiplicity(const WeightVec& lambda);

// The expanded product form of bracket_det(kind, rho, m).
LaurentPoly denominator_closed_form(BracketKind kind, int m);

enum class DimGroup { GL, Sp, SOodd, Pin };

// Formal dimension of the highest-weight module by the closed Weyl products;
// exact, defined for half-integer weights (where the value may be a
// non-integer rational), never computed by evaluating a character quotient
// at 1. Pin doubles the even orthogonal product, i.e. equals s^D at 1.
Rat dim_formal(DimGroup group, const WeightVec& w);

enum class IdentityName {
  AdeltaEven,     // a_{rhoA}(y..y^{-1}) = c_{rhoC}(y) d_{rhoD}(y), m = 2n
  AdeltaOdd,      // both displayed factorizations at m = 2n+1
  StairSpPin,     // s^C and s^D agree at the (n,..,1) staircase
  StairSoOddPin,  // s^B and s^D agree at the (n-1/2,..,1/2) staircase
  DenomProduct,   // bracket_det(kind, rho) = closed product
};

VerdictReport check_identity(IdentityName name, int size,
                             BracketKind denom_kind = BracketKind::A);

std::string identity_name_str(IdentityName name);

}  // namespace rho

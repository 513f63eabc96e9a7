#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rho/rational.hpp"
#include "json.hpp"

namespace rho {

// Exponent vector of one monomial, stored in HALF-UNITS: entry = 2 x true
// exponent. Slot 0 is reserved for the homological variable t and must stay
// even (t never takes half-integer powers). Length is fixed per ring context.
using ExpVec = std::vector<int32_t>;

// Sparse exact Laurent polynomial over Q in variables t, x_1..x_{arity-1},
// with half-integer exponents. Terms are kept in lexicographic order on the
// exponent vector; this order is canonical for equality, serialization and
// iteration, so results are identical across runs and thread counts.
class LaurentPoly {
 public:
  LaurentPoly() : arity_(1) {}
  explicit LaurentPoly(int arity) : arity_(arity) {}

  static LaurentPoly zero(int arity) { return LaurentPoly(arity); }
  static LaurentPoly constant(int arity, const Rat& c);
  static LaurentPoly one(int arity) { return constant(arity, 1); }
  // x_var^(half_units/2); var 0 is t.
  static LaurentPoly variable(int arity, int var, int half_units = 2);
  static LaurentPoly monomial(int arity, const ExpVec& e, const Rat& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<ExpVec, Rat>& terms() const { return terms_; }

  Rat coeff(const ExpVec& e) const;

  void add_term(const ExpVec& e, const Rat& c);

  // *this += c * x^shift * o, without temporaries; the workhorse of the
  // division loop.
  void add_scaled(const LaurentPoly& o, const Rat& c, const ExpVec& shift);

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly pow(unsigned e) const;

  // Value under x_i -> 1 for every variable including t (sum of coefficients).
  Rat eval_ones() const;

  // Largest term in lex order; poly must be nonzero.
  const std::pair<const ExpVec, Rat>& lead() const;

  // Per-variable min/max half-unit exponent over the support.
  void support_box(ExpVec& lo, ExpVec& hi) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  friend LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q);

  int arity_;
  std::map<ExpVec, Rat> terms_;
};

// Exact product. Throws input_error on arity mismatch.
LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q);

struct divisibility_error : std::runtime_error {
  LaurentPoly remainder;
  divisibility_error(const std::string& what, LaurentPoly rem)
      : std::runtime_error(what), remainder(std::move(rem)) {}
};

// Exact quotient p/d in the Laurent ring. Throws divisibility_error carrying
// the nonzero remainder if d does not divide p.
LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d);
std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p,
                                            const LaurentPoly& d,
                                            LaurentPoly* remainder = nullptr);

// Specialization of each variable to an invertible monomial or the unit 1.
// images[v] is the image of variable v (all images in the target ring of
// arity out_arity). A variable occurring with half-integer exponent must map
// to an image with integer exponents, and coefficient 1 unless the source
// exponents are integral.
LaurentPoly substitute(const LaurentPoly& p,
                       const std::vector<LaurentPoly>& images, int out_arity);

// Identity images for an arity (t-slot included), convenience for building
// assignments that change only a few variables.
std::vector<LaurentPoly> identity_images(int arity);

// mono^w for a single-term polynomial; the coefficient must be 1 unless w is
// an integer.
LaurentPoly monomial_pow(const LaurentPoly& mono, HalfInt w);

struct PolyMatrix {
  int rows = 0, cols = 0;
  std::vector<LaurentPoly> entries;

  PolyMatrix() = default;
  PolyMatrix(int r, int c, int arity)
      : rows(r), cols(c), entries(r * c, LaurentPoly::zero(arity)) {}
  LaurentPoly& at(int i, int j) { return entries[i * cols + j]; }
  const LaurentPoly& at(int i, int j) const { return entries[i * cols + j]; }
};

// Exact determinant by Laplace expansion along rows with memoization on
// column subsets (O(2^s * s) polynomial operations for size s). The parallel
// version fills the memo table level by level with OpenMP; the serial
// version is the plain recursive reference kept for testing. Both require a
// square matrix of size <= max_size.
LaurentPoly determinant(const PolyMatrix& m, int max_size = 12);
LaurentPoly determinant_serial(const PolyMatrix& m, int max_size = 12);

nlohmann::json poly_to_json(const LaurentPoly& p,
                            const std::vector<std::string>& names);

// Empty string when equal, else a printable first differing term.
std::string first_difference(const LaurentPoly& lhs, const LaurentPoly& rhs,
                             const std::vector<std::string>& names = {});

// Default names: t, x1, .., or t, y1, .. when y_names is set.
std::vector<std::string> ring_names(int arity, const std::string& stem = "x");

}  // namespace rho

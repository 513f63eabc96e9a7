#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rho {

// Exact rational coefficients. mpq_class keeps values canonical
// (lowest terms, positive denominator, 0 = 0/1), which is exactly the
// invariant the rest of the library relies on.
using Rat = mpq_class;
using Int = mpz_class;

struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct unsupported_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// mpq_class(num, den) does not reduce; every two-argument construction in
// this codebase goes through here so stored values stay canonical.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical string form: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Half-integers stored in doubled form: value = doubled / 2.
// Weights, exponents and the B/D spin parameters all live here.
struct HalfInt {
  int doubled = 0;

  HalfInt() = default;
  explicit constexpr HalfInt(int d) : doubled(d) {}
  static constexpr HalfInt of_int(int n) { return HalfInt(2 * n); }

  bool is_integer() const { return doubled % 2 == 0; }
  int as_int() const {
    if (!is_integer()) throw input_error("HalfInt: not an integer: " + str());
    return doubled / 2;
  }

  HalfInt operator+(HalfInt o) const { return HalfInt(doubled + o.doubled); }
  HalfInt operator-(HalfInt o) const { return HalfInt(doubled - o.doubled); }
  HalfInt operator-() const { return HalfInt(-doubled); }
  bool operator==(const HalfInt&) const = default;
  auto operator<=>(const HalfInt&) const = default;

  Rat as_rat() const { return frac(doubled, 2); }

  std::string str() const {
    if (is_integer()) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
  }
};

inline HalfInt operator+(HalfInt a, int b) { return a + HalfInt::of_int(b); }
inline HalfInt operator-(HalfInt a, int b) { return a - HalfInt::of_int(b); }

// Parses "a", "-a", "a/2" or "-a/2".
inline HalfInt parse_half_int(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return HalfInt::of_int(std::stoi(s));
    int num = std::stoi(s.substr(0, slash));
    int den = std::stoi(s.substr(slash + 1));
    if (den == 1) return HalfInt::of_int(num);
    if (den == 2) return HalfInt(num);
  } catch (const std::exception&) {
  }
  throw input_error("cannot parse half-integer: '" + s + "'");
}

}  // namespace rho

#include "rho/weights.hpp"

#include <algorithm>
#include <sstream>

namespace rho {

WeightVec weight_of_ints(const std::vector<int>& v) {
  WeightVec w;
  w.reserve(v.size());
  for (int x : v) w.push_back(HalfInt::of_int(x));
  return w;
}

std::string weight_str(const WeightVec& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i)
    out << (i ? "," : "") << w[i].str();
  out << ")";
  return out.str();
}

HalfInt weight_sum(const WeightVec& w) {
  HalfInt s;
  for (HalfInt x : w) s = s + x;
  return s;
}

HalfInt BCDParams::gamma() const {
  switch (family) {
    case Family::B:
      return HalfInt(1);
    case Family::C:
      return HalfInt(0);
    case Family::D:
      return HalfInt(2);
  }
  return HalfInt(0);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::B:
      return "B";
    case Family::C:
      return "C";
    case Family::D:
      return "D";
  }
  return "?";
}

std::string params_str(const Params& p) {
  std::ostringstream out;
  if (const auto* a = std::get_if<TypeAParams>(&p)) {
    out << "A n=" << a->n << " k=" << a->k << " lambda=(";
    for (std::size_t i = 0; i < a->lambda.size(); ++i)
      out << (i ? "," : "") << a->lambda[i];
    out << ")";
  } else {
    const auto& b = std::get<BCDParams>(p);
    out << family_name(b.family) << " m=" << b.m
        << " lambda=" << weight_str(b.lambda);
  }
  return out.str();
}

TypeAParams validate(const TypeAParams& p) {
  if (p.k < 1 || p.n < p.k)
    throw input_error("type A requires n >= k >= 1");
  if (static_cast<int>(p.lambda.size()) != p.m())
    throw input_error("type A lambda must have n+k entries");
  for (std::size_t i = 1; i < p.lambda.size(); ++i)
    if (p.lambda[i - 1] < p.lambda[i])
      throw input_error("lambda not weakly decreasing at index " +
                        std::to_string(i + 1));
  return p;
}

BCDParams validate(const BCDParams& p) {
  if (p.m < 1) throw input_error("m must be positive");
  if (static_cast<int>(p.lambda.size()) != p.m)
    throw input_error("lambda must have m entries");
  const bool half = !p.lambda[0].is_integer();
  for (std::size_t i = 0; i < p.lambda.size(); ++i) {
    if (p.lambda[i].is_integer() == half)
      throw input_error("mixed integer/half-integer lambda at index " +
                        std::to_string(i + 1));
    if (i > 0 && p.lambda[i - 1] < p.lambda[i])
      throw input_error("lambda not weakly decreasing at index " +
                        std::to_string(i + 1));
  }
  if (p.lambda.back() < HalfInt(0))
    throw input_error("lambda_m must be nonnegative (index " +
                      std::to_string(p.m) + ")");
  if (half && p.family == Family::C)
    throw input_error("half-integer lambda not admitted in family C (index 1)");
  return p;
}

WeightVec delta_a(int m) {
  WeightVec d(m);
  for (int j = 0; j < m; ++j) d[j] = HalfInt::of_int(m - 1 - j);
  return d;
}

WeightVec delta_bcd(const BCDParams& p) {
  WeightVec d(p.m);
  for (int j = 0; j < p.m; ++j)
    d[j] = HalfInt::of_int(p.m - j) - p.gamma();
  return d;
}

BetaA beta_type_a(const TypeAParams& p, const SubsetS& s) {
  if (s.size() != p.n || s.ambient() != p.m())
    throw input_error("beta_type_a requires |S| = n inside [n+k]");
  WeightVec ld(p.m());
  for (int j = 0; j < p.m(); ++j)
    ld[j] = HalfInt::of_int(p.lambda[j] + p.m() - 1 - j);
  BetaA out;
  out.beta1.reserve(p.n);
  int i = 0;
  for (int e : s.elements()) {
    // (lambda+delta)_e - (n-1-i) - k
    out.beta1.push_back(ld[e - 1] - (p.n - 1 - i) - p.k);
    ++i;
  }
  out.beta2.reserve(p.k);
  i = 0;
  const SubsetS comp = s.complement();
  for (int e : comp.elements()) {
    out.beta2.push_back(ld[e - 1] - (p.k - 1 - i));
    ++i;
  }
  return out;
}

BetaBCD beta_bcd(const BCDParams& p, const SubsetS& s) {
  if (s.ambient() != p.m) throw input_error("beta_bcd: subset ambient != m");
  WeightVec delta = delta_bcd(p);
  WeightVec iota(p.m);
  for (int j = 0; j < p.m; ++j) {
    iota[j] = p.lambda[j] + delta[j];
    if (s.contains(j + 1)) iota[j] = -iota[j];
  }
  std::sort(iota.begin(), iota.end(),
            [](HalfInt a, HalfInt b) { return b < a; });
  BetaBCD out;
  out.beta.resize(p.m);
  for (int j = 0; j < p.m; ++j) out.beta[j] = iota[j] - delta[j];
  long exponent = static_cast<long>(p.m) * s.size() + s.sigma();
  out.sort_sign = exponent % 2 == 0 ? 1 : -1;
  return out;
}

RhoWeights rho_weights(const TypeAParams& p) {
  if (p.k != p.n && p.k != p.n - 1)
    throw unsupported_error("rho weights in type A need k in {n-1, n}");
  RhoWeights r;
  for (int i = 1; i <= p.n; ++i)
    r.top.push_back(HalfInt::of_int(p.lambda[2 * i - 2] - (i - 1)));
  for (int i = 1; i <= p.k; ++i)
    r.bot.push_back(HalfInt::of_int(p.lambda[2 * i - 1] + p.n - i));
  return r;
}

RhoWeights rho_weights(const BCDParams& p) {
  RhoWeights r;
  const int n = p.n(), eps = p.eps();
  for (int i = 1; i <= n; ++i)
    r.top.push_back(p.lambda[2 * i - 2 + eps] + (n + 1 - i) - p.gamma());
  for (int i = 1; i <= n + eps; ++i)
    r.bot.push_back(p.lambda[2 * i - 1 - eps] + (n + eps + 1 - i) - p.gamma());
  return r;
}

long internal_degree(const TypeAParams& p, const SubsetS& s) {
  if (s.size() != p.n) throw input_error("internal_degree: |S| != n");
  long d = 0;
  for (int i = 1; i <= p.n; ++i) d += p.lambda[i - 1] + p.m() - i;
  for (int e : s.elements()) d -= p.lambda[e - 1] + p.m() - e;
  return d;
}

long internal_degree(const BCDParams& p, const SubsetS& s) {
  WeightVec delta = delta_bcd(p);
  HalfInt sum;
  for (int e : s.elements()) sum = sum + p.lambda[e - 1] + delta[e - 1];
  // Family B is graded with V^* in degree 1, so the twist is the full weight
  // deficit 2*sum. For C and D the generators sit in weight -2 and the twist
  // is sum itself; the half-integral case (one spin component of D, |S| odd)
  // rounds up, matching the normalization that embeds both components in one
  // exterior-algebra resolution.
  if (p.family == Family::B) return sum.doubled;
  return (sum.doubled + (sum.doubled % 2 != 0 ? 1 : 0)) / 2;
}

long hom_degree(const TypeAParams& p, const SubsetS& s) {
  return s.rank_a(p.n);
}

long hom_degree(const BCDParams& p, const SubsetS& s) {
  return s.inverse().sigma() - static_cast<long>(p.gamma_floor()) * s.size();
}

}  // namespace rho

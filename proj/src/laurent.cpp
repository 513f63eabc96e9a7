#include "rho/laurent.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

namespace rho {

namespace {

void check_same_arity(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.arity() != b.arity())
    throw input_error("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                      std::to_string(b.arity()));
}

}  // namespace

LaurentPoly LaurentPoly::constant(int arity, const Rat& c) {
  LaurentPoly p(arity);
  p.add_term(ExpVec(arity, 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int arity, int var, int half_units) {
  if (var < 0 || var >= arity) throw input_error("variable index out of range");
  ExpVec e(arity, 0);
  e[var] = half_units;
  return monomial(arity, e, 1);
}

LaurentPoly LaurentPoly::monomial(int arity, const ExpVec& e, const Rat& c) {
  if (static_cast<int>(e.size()) != arity)
    throw input_error("monomial exponent length does not match arity");
  LaurentPoly p(arity);
  p.add_term(e, c);
  return p;
}

Rat LaurentPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPoly::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  // find first: emplace would allocate a node even for existing keys, and
  // the division loop hits existing keys almost every time
  auto it = terms_.lower_bound(e);
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace_hint(it, e, c);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_arity(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_arity(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  return multiply(*this, o);
}

namespace {

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int32_t x : v) {
      h ^= static_cast<uint32_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q) {
  check_same_arity(p, q);
  LaurentPoly r(p.arity());
  if (p.is_zero() || q.is_zero()) return r;

  // Hash accumulation keeps the inner loop allocation-free; the result is
  // moved into the ordered map once at the end.
  std::unordered_map<ExpVec, Rat, ExpVecHash> acc;
  acc.reserve(p.num_terms() * 2 + q.num_terms());
  ExpVec e(p.arity());
  Rat prod;
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) {
      for (int i = 0; i < p.arity(); ++i) e[i] = ep[i] + eq[i];
      mpq_mul(prod.get_mpq_t(), cp.get_mpq_t(), cq.get_mpq_t());
      auto it = acc.find(e);
      if (it == acc.end())
        acc.emplace(e, prod);
      else
        it->second += prod;
    }
  }
  for (auto& [ea, ca] : acc)
    if (ca != 0) r.terms_.emplace(ea, std::move(ca));
  return r;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Rat& c,
                             const ExpVec& shift) {
  check_same_arity(*this, o);
  if (c == 0) return;
  ExpVec e(arity_);
  Rat prod;
  for (const auto& [eo, co] : o.terms_) {
    for (int i = 0; i < arity_; ++i) e[i] = eo[i] + shift[i];
    mpq_mul(prod.get_mpq_t(), co.get_mpq_t(), c.get_mpq_t());
    add_term(e, prod);
  }
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly acc = one(arity_);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    base = (e >>= 1u) ? base * base : base;
  }
  return acc;
}

Rat LaurentPoly::eval_ones() const {
  Rat s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

const std::pair<const ExpVec, Rat>& LaurentPoly::lead() const {
  if (terms_.empty()) throw input_error("lead() of zero polynomial");
  return *terms_.rbegin();
}

void LaurentPoly::support_box(ExpVec& lo, ExpVec& hi) const {
  lo.assign(arity_, 0);
  hi.assign(arity_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      lo = e;
      hi = e;
      first = false;
      continue;
    }
    for (int i = 0; i < arity_; ++i) {
      lo[i] = std::min(lo[i], e[i]);
      hi[i] = std::max(hi[i], e[i]);
    }
  }
}

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& p,
                                            const LaurentPoly& d,
                                            LaurentPoly* remainder) {
  check_same_arity(p, d);
  if (d.is_zero()) throw input_error("division by zero polynomial");
  if (p.is_zero()) return LaurentPoly::zero(p.arity());

  // If d | p, the per-variable degree bounds of the quotient are forced:
  // top and bottom slices of a product are products of slices, so min and
  // max degrees add. Any tentative quotient monomial outside this box
  // witnesses inexactness.
  ExpVec plo, phi, dlo, dhi;
  p.support_box(plo, phi);
  d.support_box(dlo, dhi);
  const int n = p.arity();
  ExpVec qlo(n), qhi(n);
  for (int i = 0; i < n; ++i) {
    qlo[i] = plo[i] - dlo[i];
    qhi[i] = phi[i] - dhi[i];
    if (qlo[i] > qhi[i]) {
      if (remainder) *remainder = p;
      return std::nullopt;
    }
  }

  const auto& dl = d.lead();
  LaurentPoly q(n), r = p;
  ExpVec e(n);
  Rat coef;
  while (!r.is_zero()) {
    const auto& rl = r.lead();
    bool inside = true;
    for (int i = 0; i < n; ++i) {
      e[i] = rl.first[i] - dl.first[i];
      inside = inside && qlo[i] <= e[i] && e[i] <= qhi[i];
    }
    if (!inside) {
      if (remainder) *remainder = r;
      return std::nullopt;
    }
    mpq_div(coef.get_mpq_t(), rl.second.get_mpq_t(), dl.second.get_mpq_t());
    q.add_term(e, coef);
    mpq_neg(coef.get_mpq_t(), coef.get_mpq_t());
    r.add_scaled(d, coef, e);
  }
  return q;
}

LaurentPoly exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
  LaurentPoly rem(p.arity());
  auto q = try_exact_divide(p, d, &rem);
  if (!q)
    throw divisibility_error("inexact Laurent division (nonzero remainder)",
                             rem);
  return *q;
}

std::vector<LaurentPoly> identity_images(int arity) {
  std::vector<LaurentPoly> im;
  im.reserve(arity);
  for (int v = 0; v < arity; ++v) im.push_back(LaurentPoly::variable(arity, v));
  return im;
}

LaurentPoly monomial_pow(const LaurentPoly& mono, HalfInt w) {
  if (mono.num_terms() != 1)
    throw input_error("monomial_pow: not a monomial");
  const auto& [e, c] = *mono.terms().begin();
  if (c != 1 && !w.is_integer())
    throw input_error("monomial_pow: half-integer power of a non-unit");
  ExpVec out(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    long long prod = static_cast<long long>(e[i]) * w.doubled;
    if (prod % 2 != 0)
      throw input_error("monomial_pow: quarter-integer exponent");
    out[i] = static_cast<int32_t>(prod / 2);
  }
  Rat coeff = 1;
  if (c != 1) {
    int ex = w.as_int();
    Rat f = ex < 0 ? Rat(1) / c : c;
    for (int i = 0; i < std::abs(ex); ++i) coeff *= f;
  }
  return LaurentPoly::monomial(static_cast<int>(e.size()), out, coeff);
}

LaurentPoly substitute(const LaurentPoly& p,
                       const std::vector<LaurentPoly>& images, int out_arity) {
  if (static_cast<int>(images.size()) != p.arity())
    throw input_error("substitute: need one image per variable");

  struct Image {
    ExpVec e;
    Rat c;
  };
  std::vector<Image> ims;
  ims.reserve(images.size());
  for (const auto& img : images) {
    if (img.num_terms() != 1)
      throw input_error("substitute: image must be an invertible monomial");
    const auto& [e, c] = *img.terms().begin();
    if (static_cast<int>(e.size()) != out_arity)
      throw input_error("substitute: image arity mismatch");
    if (c == 0) throw input_error("substitute: image not invertible");
    ims.push_back({e, c});
  }

  LaurentPoly r(out_arity);
  ExpVec e(out_arity);
  for (const auto& [pe, pc] : p.terms()) {
    std::fill(e.begin(), e.end(), 0);
    Rat c = pc;
    for (int v = 0; v < p.arity(); ++v) {
      int32_t he = pe[v];
      if (he == 0) continue;
      const Image& im = ims[v];
      for (int i = 0; i < out_arity; ++i) {
        long long prod = static_cast<long long>(he) * im.e[i];
        if (prod % 2 != 0)
          throw input_error(
              "substitute: half-integer power of a half-integer image");
        e[i] += static_cast<int32_t>(prod / 2);
      }
      if (im.c != 1) {
        if (he % 2 != 0)
          throw input_error(
              "substitute: half-integer power of a non-unit coefficient");
        int ex = he / 2;
        Rat f = im.c;
        if (ex < 0) {
          f = 1 / f;
          ex = -ex;
        }
        for (int k = 0; k < ex; ++k) c *= f;
      }
    }
    r.add_term(e, c);
  }
  return r;
}

namespace {

void check_square(const PolyMatrix& m, int max_size) {
  if (m.rows != m.cols) throw input_error("determinant: matrix not square");
  if (m.rows > max_size)
    throw input_error("determinant: size " + std::to_string(m.rows) +
                      " exceeds bound " + std::to_string(max_size));
}

int matrix_arity(const PolyMatrix& m) {
  return m.entries.empty() ? 1 : m.entries.front().arity();
}

LaurentPoly det_rec(const PolyMatrix& m, int row, uint32_t colmask,
                    std::unordered_map<uint32_t, LaurentPoly>& memo) {
  if (colmask == 0) return LaurentPoly::one(matrix_arity(m));
  auto it = memo.find(colmask);
  if (it != memo.end()) return it->second;
  LaurentPoly acc(matrix_arity(m));
  int parity = 0;
  for (int c = 0; c < m.cols; ++c) {
    if (!(colmask & (1u << c))) continue;
    const LaurentPoly& entry = m.at(row, c);
    if (!entry.is_zero()) {
      LaurentPoly sub = det_rec(m, row + 1, colmask & ~(1u << c), memo);
      if (parity % 2 == 0)
        acc += entry * sub;
      else
        acc -= entry * sub;
    }
    ++parity;
  }
  memo.emplace(colmask, acc);
  return acc;
}

}  // namespace

LaurentPoly determinant_serial(const PolyMatrix& m, int max_size) {
  check_square(m, max_size);
  if (m.rows == 0) return LaurentPoly::one(matrix_arity(m));
  std::unordered_map<uint32_t, LaurentPoly> memo;
  return det_rec(m, 0, (1u << m.rows) - 1u, memo);
}

LaurentPoly determinant(const PolyMatrix& m, int max_size) {
  check_square(m, max_size);
  const int s = m.rows;
  const int arity = matrix_arity(m);
  if (s == 0) return LaurentPoly::one(arity);

  // table[mask] = det of the submatrix on the last popcount(mask) rows and
  // the columns in mask. Level k depends only on level k-1, so each level is
  // an independent parallel sweep.
  std::vector<LaurentPoly> table(std::size_t(1) << s, LaurentPoly::zero(arity));
  std::vector<std::vector<uint32_t>> levels(s + 1);
  for (uint32_t mask = 1; mask < (1u << s); ++mask)
    levels[std::popcount(mask)].push_back(mask);

  for (int k = 1; k <= s; ++k) {
    const int row = s - k;
    const auto& masks = levels[k];
#pragma omp parallel for schedule(dynamic)
    for (std::size_t mi = 0; mi < masks.size(); ++mi) {
      const uint32_t mask = masks[mi];
      LaurentPoly acc(arity);
      int parity = 0;
      for (int c = 0; c < s; ++c) {
        if (!(mask & (1u << c))) continue;
        const LaurentPoly& entry = m.at(row, c);
        if (!entry.is_zero()) {
          if (k == 1) {
            if (parity % 2 == 0)
              acc += entry;
            else
              acc -= entry;
          } else {
            const LaurentPoly& sub = table[mask & ~(1u << c)];
            if (parity % 2 == 0)
              acc += entry * sub;
            else
              acc -= entry * sub;
          }
        }
        ++parity;
      }
      table[mask] = std::move(acc);
    }
  }
  return table[(1u << s) - 1u];
}

std::vector<std::string> ring_names(int arity, const std::string& stem) {
  std::vector<std::string> names;
  names.reserve(arity);
  names.emplace_back("t");
  for (int i = 1; i < arity; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

std::string first_difference(const LaurentPoly& lhs, const LaurentPoly& rhs,
                             const std::vector<std::string>& names) {
  LaurentPoly d = lhs - rhs;
  if (d.is_zero()) return "";
  const auto& [e, c] = *d.terms().begin();
  return "differing term " + LaurentPoly::monomial(d.arity(), e, c).str(names);
}

nlohmann::json poly_to_json(const LaurentPoly& p,
                            const std::vector<std::string>& names) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"coeff", rat_str(c)}, {"exp2", e}});
  }
  return {{"vars", names}, {"terms", terms}};
}

std::string LaurentPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<std::string> nm =
      names.empty() ? ring_names(arity_) : names;
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += nm[i];
      if (e[i] != 2) {
        mono += "^";
        if (e[i] % 2 == 0) {
          mono += std::to_string(e[i] / 2);
        } else {
          mono += "(" + std::to_string(e[i]) + "/2)";
        }
      }
    }
    if (mono.empty()) {
      out << rat_str(a);
    } else {
      if (a != 1) out << rat_str(a) << "*";
      out << mono;
    }
  }
  return out.str();
}

}  // namespace rho

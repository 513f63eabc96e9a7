#include "rho/homology.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace rho {

namespace {

// The verifier asks for the same graded character several times per
// instance (determinant form, divisibility, equidistribution,
// factorization); the sums are the dominant cost, so memoize them.
std::mutex cache_mutex;
std::map<std::string, LaurentPoly> h_cache;

LaurentPoly cached_or(const std::string& key,
                      const std::function<LaurentPoly()>& compute) {
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = h_cache.find(key);
    if (it != h_cache.end()) return it->second;
  }
  LaurentPoly h = compute();
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (h_cache.size() > 48) h_cache.clear();
  return h_cache.emplace(key, std::move(h)).first->second;
}

WeightVec plus(const WeightVec& a, const WeightVec& b) {
  WeightVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Numerator bracket and shared denominator of a type A term. Both Schur
// factors live in the ring (t, x_1..x_n); the second uses x_1..x_k only.
struct TypeACtx {
  TypeAParams p;
  int arity;
  LaurentPoly den_n, den_k;

  explicit TypeACtx(const TypeAParams& params)
      : p(validate(params)), arity(1 + params.n) {
    den_n = bracket_det(BracketKind::A, rho_vector(BracketKind::A, p.n), p.n);
    std::vector<LaurentPoly> xs;
    for (int i = 1; i <= p.k; ++i)
      xs.push_back(LaurentPoly::variable(arity, i));
    den_k =
        bracket_det_at(BracketKind::A, rho_vector(BracketKind::A, p.k), xs);
  }

  LaurentPoly term(const SubsetS& s) const {
    BetaA b = beta_type_a(p, s);
    LaurentPoly num1 = bracket_det(
        BracketKind::A, plus(b.beta1, rho_vector(BracketKind::A, p.n)), p.n);
    std::vector<LaurentPoly> xs;
    for (int i = 1; i <= p.k; ++i)
      xs.push_back(LaurentPoly::variable(arity, i));
    LaurentPoly num2 = bracket_det_at(
        BracketKind::A, plus(b.beta2, rho_vector(BracketKind::A, p.k)), xs);
    return exact_divide(num1, den_n) * exact_divide(num2, den_k);
  }
};

struct BCDCtx {
  BCDParams p;
  int arity;
  WeightVec delta;
  std::vector<LaurentPoly> z;
  LaurentPoly den;

  explicit BCDCtx(const BCDParams& params)
      : p(validate(params)), arity(1 + params.m / 2) {
    delta = delta_bcd(p);
    z = z_images(p.m);
    den = bracket_det_at(BracketKind::A, delta, z);
  }

  // sign(S) * a_{iota_lambda(S)}(z) / a_delta(z)
  LaurentPoly term(const SubsetS& s) const {
    WeightVec iota(p.m);
    for (int j = 0; j < p.m; ++j) {
      iota[j] = p.lambda[j] + delta[j];
      if (s.contains(j + 1)) iota[j] = -iota[j];
    }
    LaurentPoly num = bracket_det_at(BracketKind::A, iota, z);
    LaurentPoly q = exact_divide(num, den);
    int sign = beta_bcd(p, s).sort_sign;
    if (sign < 0) q = -q;
    return q;
  }
};

// Subset filter for the combinatorial sums: Both means every subset.
bool component_admits(SpinComponent c, const BCDParams& p, const SubsetS& s) {
  if (p.family != Family::D || c == SpinComponent::Both) return true;
  int want = c == SpinComponent::Even ? 0 : 1;
  return s.size() % 2 == want;
}

// Module-level filter: at lambda_m = 0 the Pin module is one orthogonal
// irreducible whose coset space is the even subsets, so Both collapses.
SpinComponent effective_component(SpinComponent c, const BCDParams& p) {
  if (p.family == Family::D && c == SpinComponent::Both && p.zeta() == 1)
    return SpinComponent::Even;
  return c;
}

template <typename F>
LaurentPoly parallel_sum(int arity, std::size_t count, F&& f) {
  LaurentPoly total(arity);
#pragma omp parallel
  {
    LaurentPoly local(arity);
#pragma omp for schedule(dynamic) nowait
    for (long i = 0; i < static_cast<long>(count); ++i) local += f(i);
#pragma omp critical(rho_parallel_sum)
    total += local;
  }
  return total;
}

}  // namespace

LaurentPoly term_character(const TypeAParams& p, const SubsetS& s) {
  return TypeACtx(p).term(s);
}

LaurentPoly term_character(const BCDParams& p, const SubsetS& s) {
  return BCDCtx(p).term(s);
}

// -------- Betti tables --------

namespace {

void finish_table(BettiTable& t) {
  std::sort(t.terms.begin(), t.terms.end(),
            [](const HomologyTerm& a, const HomologyTerm& b) {
              return std::tie(a.hom_degree, a.internal_degree, a.subset) <
                     std::tie(b.hom_degree, b.internal_degree, b.subset);
            });
  long maxh = 0;
  for (const auto& term : t.terms) maxh = std::max(maxh, term.hom_degree);
  t.totals.assign(maxh + 1, Rat(0));
  t.grand_total = 0;
  for (const auto& term : t.terms) {
    t.totals[term.hom_degree] += term.dimension;
    t.grand_total += term.dimension;
  }
}

}  // namespace

BettiTable homology_terms(const TypeAParams& p0) {
  TypeAParams p = validate(p0);
  BettiTable t;
  t.params = p;
  for (const SubsetS& s : SubsetS::subsets_of_size(p.m(), p.n)) {
    BetaA b = beta_type_a(p, s);
    HomologyTerm term;
    term.subset = s;
    term.hom_degree = hom_degree(p, s);
    term.internal_degree = internal_degree(p, s);
    term.dimension =
        dim_formal(DimGroup::GL, b.beta1) * dim_formal(DimGroup::GL, b.beta2);
    term.weights = {std::move(b.beta1), std::move(b.beta2)};
    t.terms.push_back(std::move(term));
  }
  finish_table(t);
  return t;
}

BettiTable homology_terms(const BCDParams& p0, SpinComponent component) {
  BCDParams p = validate(p0);
  BettiTable t;
  t.params = p;
  t.component = component;
  component = effective_component(component, p);
  for (const SubsetS& s : SubsetS::all_subsets(p.m)) {
    if (!component_admits(component, p, s)) continue;
    BetaBCD b = beta_bcd(p, s);
    HomologyTerm term;
    term.subset = s;
    term.hom_degree = hom_degree(p, s);
    term.internal_degree = internal_degree(p, s);
    term.dimension = dim_formal(DimGroup::GL, b.beta);
    term.weights = {std::move(b.beta)};
    t.terms.push_back(std::move(term));
  }
  finish_table(t);
  return t;
}

// -------- graded characters --------

LaurentPoly graded_character(const TypeAParams& p0) {
  return cached_or("A|" + params_str(p0), [&] {
    TypeACtx ctx(p0);
    auto subsets = SubsetS::subsets_of_size(ctx.p.m(), ctx.p.n);
    return parallel_sum(ctx.arity, subsets.size(), [&](long i) {
      const SubsetS& s = subsets[i];
      LaurentPoly tpow = LaurentPoly::variable(
          ctx.arity, 0, 2 * static_cast<int>(hom_degree(ctx.p, s)));
      return ctx.term(s) * tpow;
    });
  });
}

LaurentPoly graded_character_serial(const TypeAParams& p0) {
  TypeACtx ctx(p0);
  LaurentPoly total(ctx.arity);
  for (const SubsetS& s : SubsetS::subsets_of_size(ctx.p.m(), ctx.p.n)) {
    LaurentPoly tpow =
        LaurentPoly::variable(ctx.arity, 0, 2 * static_cast<int>(
                                                  hom_degree(ctx.p, s)));
    total += ctx.term(s) * tpow;
  }
  return total;
}

LaurentPoly graded_character(const BCDParams& p0, SpinComponent component) {
  std::string key =
      params_str(p0) + "|" + std::to_string(static_cast<int>(component));
  return cached_or(key, [&] {
    BCDCtx ctx(p0);
    auto subsets = SubsetS::all_subsets(ctx.p.m);
    return parallel_sum(ctx.arity, subsets.size(), [&](long i) {
      const SubsetS& s = subsets[i];
      if (!component_admits(component, ctx.p, s))
        return LaurentPoly::zero(ctx.arity);
      LaurentPoly tpow = LaurentPoly::variable(
          ctx.arity, 0, 2 * static_cast<int>(hom_degree(ctx.p, s)));
      return ctx.term(s) * tpow;
    });
  });
}

LaurentPoly graded_character_serial(const BCDParams& p0,
                                    SpinComponent component) {
  BCDCtx ctx(p0);
  LaurentPoly total(ctx.arity);
  for (const SubsetS& s : SubsetS::all_subsets(ctx.p.m)) {
    if (!component_admits(component, ctx.p, s)) continue;
    LaurentPoly tpow =
        LaurentPoly::variable(ctx.arity, 0, 2 * static_cast<int>(
                                                  hom_degree(ctx.p, s)));
    total += ctx.term(s) * tpow;
  }
  return total;
}

// -------- blocks --------

std::vector<SubsetS> block_keys(const TypeAParams& p) {
  std::vector<int> odd;
  for (int i = 1; i <= p.m(); i += 2) odd.push_back(i);
  std::vector<SubsetS> keys;
  for (uint32_t mask = 0; mask < (1u << odd.size()); ++mask) {
    std::vector<int> e;
    for (std::size_t j = 0; j < odd.size(); ++j)
      if (mask & (1u << j)) e.push_back(odd[j]);
    keys.emplace_back(std::move(e), p.m());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<SubsetS> block_keys(const BCDParams& p) {
  std::vector<int> idx;
  for (int i = 1; i <= p.m; ++i)
    if (i % 2 == 1 - p.eps()) idx.push_back(i);
  std::vector<SubsetS> keys;
  for (uint32_t mask = 0; mask < (1u << idx.size()); ++mask) {
    std::vector<int> e;
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (mask & (1u << j)) e.push_back(idx[j]);
    keys.emplace_back(std::move(e), p.m);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

LaurentPoly restricted_character(const TypeAParams& p0, const SubsetS& T) {
  TypeACtx ctx(p0);
  for (int x : T.elements())
    if (x % 2 == 0)
      throw input_error("type A block key must lie inside [n+k]_odd");
  if (T.ambient() != ctx.p.m())
    throw input_error("block key ambient must be n+k");
  auto subsets = SubsetS::subsets_of_size(ctx.p.m(), ctx.p.n);
  std::vector<SubsetS> hits;
  for (const SubsetS& s : subsets)
    if (s.slice(1) == T) hits.push_back(s);
  return parallel_sum(ctx.arity, hits.size(),
                      [&](long i) { return ctx.term(hits[i]); });
}

LaurentPoly restricted_character(const BCDParams& p0, const SubsetS& T) {
  BCDCtx ctx(p0);
  const int parity = 1 - ctx.p.eps();
  for (int x : T.elements())
    if (x % 2 != parity)
      throw input_error("block key must lie inside [m]_{1-eps}");
  if (T.ambient() != ctx.p.m)
    throw input_error("block key ambient must be m");
  auto subsets = SubsetS::all_subsets(ctx.p.m);
  std::vector<SubsetS> hits;
  for (const SubsetS& s : subsets)
    if (s.slice(parity) == T) hits.push_back(s);
  return parallel_sum(ctx.arity, hits.size(),
                      [&](long i) { return ctx.term(hits[i]); });
}

std::map<SubsetS, Block> blocks(const TypeAParams& p) {
  std::map<SubsetS, Block> out;
  for (const SubsetS& T : block_keys(p)) {
    LaurentPoly chi = restricted_character(p, T);
    Rat dim = chi.eval_ones();
    out.emplace(T, Block{std::move(chi), std::move(dim)});
  }
  return out;
}

std::map<SubsetS, Block> blocks(const BCDParams& p0, SpinComponent component) {
  BCDCtx ctx(p0);
  component = effective_component(component, ctx.p);
  const int parity = 1 - ctx.p.eps();
  std::map<SubsetS, Block> out;
  for (const SubsetS& T : block_keys(ctx.p))
    out.emplace(T, Block{LaurentPoly(ctx.arity), Rat(0)});
  for (const SubsetS& s : SubsetS::all_subsets(ctx.p.m)) {
    if (!component_admits(component, ctx.p, s)) continue;
    out.at(s.slice(parity)).chi += ctx.term(s);
  }
  for (auto& [T, b] : out) b.dimension = b.chi.eval_ones();
  return out;
}

// -------- serialization --------

namespace {

nlohmann::json weight_json(const WeightVec& w) {
  nlohmann::json a = nlohmann::json::array();
  for (HalfInt h : w) a.push_back(h.str());
  return a;
}

nlohmann::json params_json(const Params& p) {
  if (const auto* a = std::get_if<TypeAParams>(&p)) {
    nlohmann::json lam = nlohmann::json::array();
    for (int x : a->lambda) lam.push_back(std::to_string(x));
    return {{"type", "A"}, {"n", a->n}, {"k", a->k}, {"lambda", lam}};
  }
  const auto& b = std::get<BCDParams>(p);
  return {{"type", family_name(b.family)},
          {"m", b.m},
          {"lambda", weight_json(b.lambda)}};
}

}  // namespace

nlohmann::json BettiTable::to_json() const {
  nlohmann::json jterms = nlohmann::json::array();
  for (const auto& term : terms) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& wv : term.weights) w.push_back(weight_json(wv));
    jterms.push_back({{"S", term.subset.elements()},
                      {"hom", term.hom_degree},
                      {"internal", term.internal_degree},
                      {"weights", w},
                      {"dim", rat_str(term.dimension)}});
  }
  nlohmann::json jtotals = nlohmann::json::array();
  for (const auto& r : totals) jtotals.push_back(rat_str(r));
  nlohmann::json j{{"params", params_json(params)},
                   {"terms", jterms},
                   {"totals", jtotals},
                   {"grand_total", rat_str(grand_total)}};
  if (std::holds_alternative<BCDParams>(params) &&
      std::get<BCDParams>(params).family == Family::D) {
    j["spin_component"] = component == SpinComponent::Even   ? "even"
                          : component == SpinComponent::Odd ? "odd"
                                                            : "both";
  }
  return j;
}

}  // namespace rho

#include "rho/subsets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rho {

SubsetS::SubsetS(std::vector<int> elems, int ambient)
    : elems_(std::move(elems)), m_(ambient) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    bool ok = elems_[i] >= 1 && elems_[i] <= m_ &&
              (i == 0 || elems_[i - 1] < elems_[i]);
    if (!ok)
      throw input_error("subset must be strictly increasing inside [m]");
  }
}

std::vector<SubsetS> SubsetS::all_subsets(int m) {
  std::vector<SubsetS> out;
  out.reserve(std::size_t(1) << m);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> e;
    for (int i = 1; i <= m; ++i)
      if (mask & (1u << (i - 1))) e.push_back(i);
    out.emplace_back(std::move(e), m);
  }
  return out;
}

std::vector<SubsetS> SubsetS::subsets_of_size(int m, int r) {
  std::vector<SubsetS> out;
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 1);
  if (r > m) return out;
  while (true) {
    out.emplace_back(idx, m);
    int i = r - 1;
    while (i >= 0 && idx[i] == m - (r - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool SubsetS::contains(int x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

long SubsetS::sigma() const {
  return std::accumulate(elems_.begin(), elems_.end(), 0L);
}

SubsetS SubsetS::inverse() const {
  std::vector<int> e;
  e.reserve(elems_.size());
  for (auto it = elems_.rbegin(); it != elems_.rend(); ++it)
    e.push_back(m_ + 1 - *it);
  return SubsetS(std::move(e), m_);
}

SubsetS SubsetS::complement() const {
  std::vector<int> e;
  e.reserve(m_ - elems_.size());
  for (int i = 1; i <= m_; ++i)
    if (!contains(i)) e.push_back(i);
  return SubsetS(std::move(e), m_);
}

SubsetS SubsetS::slice(int parity) const {
  std::vector<int> e;
  for (int x : elems_)
    if (x % 2 == parity) e.push_back(x);
  return SubsetS(std::move(e), m_);
}

long SubsetS::rank_a(int n) const {
  if (size() != n)
    throw input_error("rank_a requires |S| = n = " + std::to_string(n));
  return sigma() - static_cast<long>(n) * (n + 1) / 2;
}

SubsetStats subset_stats(const SubsetS& s) {
  return SubsetStats{s.sigma(),    s.complement(),     s.inverse(), s.slice(1),
                     s.slice(0),   s.rank_ext(),       s.rank_semi_ext()};
}

namespace {

// Greedy order-embedding: match each a_i to the smallest not-yet-used
// b_j >= a_i; with both sides sorted this succeeds iff an embedding exists.
bool embeds(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t j = 0;
  for (int x : a) {
    while (j < b.size() && b[j] < x) ++j;
    if (j == b.size()) return false;
    ++j;
  }
  return true;
}

}  // namespace

bool gale_leq(GaleKind kind, const SubsetS& a, const SubsetS& b) {
  if (a.ambient() != b.ambient())
    throw input_error("gale_leq: ambient sets differ");
  switch (kind) {
    case GaleKind::Fixed: {
      if (a.size() != b.size())
        throw input_error("fixed Gale order needs equal-size subsets");
      for (int i = 0; i < a.size(); ++i)
        if (a.elements()[i] > b.elements()[i]) return false;
      return true;
    }
    case GaleKind::Extended:
      return embeds(a.elements(), b.elements());
    case GaleKind::SemiExtended:
      return (a.size() - b.size()) % 2 == 0 &&
             embeds(a.elements(), b.elements());
  }
  return false;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    bool ok = parts_[i] > 0 && (i == 0 || parts_[i - 1] >= parts_[i]);
    if (!ok) throw input_error("partition parts must be weakly decreasing");
  }
}

int Partition::part(int i) const {
  return i < length() ? parts_[i] : 0;
}

long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition Partition::transpose() const {
  if (parts_.empty()) return Partition();
  std::vector<int> t(parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

int Partition::diagonal_rank() const {
  int r = 0;
  while (r < length() && parts_[r] >= r + 1) ++r;
  return r;
}

Partition hook_partition(Family family, const SubsetS& s) {
  const int m = s.ambient();
  // Hook h(i) anchored at diagonal box (j,j): arm boxes to the right,
  // leg boxes below. Arm/leg lengths exclude the corner.
  auto arm_leg = [&](int i) -> std::pair<int, int> {
    switch (family) {
      case Family::C:
        return {i, i - 1};  // (i+1, 1^{i-1})
      case Family::D:
        return {i - 2, i - 1};  // (i-1, 1^{i-1}); empty when i = 1
      case Family::B:
        return {i - 1, i - 1};  // (i, 1^{i-1})
    }
    return {0, 0};
  };
  std::vector<int> rows(2 * m + 1, 0);  // 0-based row lengths
  int j = 0;
  for (int x : s.elements()) {
    int i = m + 1 - x;
    if (family == Family::D && i == 1) continue;  // h'(1) is empty
    auto [arm, leg] = arm_leg(i);
    rows[j] = std::max(rows[j], (j + 1) + arm);
    for (int r = j + 1; r <= j + leg; ++r) rows[r] = std::max(rows[r], j + 1);
    ++j;
  }
  return Partition(std::move(rows));
}

Partition path_partition(const SubsetS& s, int n) {
  if (s.size() != n || s.ambient() != 2 * n)
    throw input_error("path_partition needs |S| = n and ambient 2n");
  std::vector<int> parts;
  parts.reserve(n);
  for (int i = n - 1; i >= 0; --i) parts.push_back(s.elements()[i] - (i + 1));
  return Partition(std::move(parts));
}

namespace {

void self_conj_rec(int m, int diag, std::vector<int>& hooks,
                   std::vector<Partition>& out) {
  // A self-conjugate partition is a nested union of symmetric hooks with
  // strictly decreasing odd sizes 2a_1+1 > 2a_2+1 > ..., a_i = arm length at
  // diagonal box i; a_i <= m - i keeps the shape inside the m x m box.
  std::vector<int> rows(m, 0);
  for (int i = 0; i < diag; ++i) {
    int a = hooks[i];
    rows[i] = std::max(rows[i], (i + 1) + a);
    for (int r = i + 1; r <= i + a; ++r) rows[r] = std::max(rows[r], i + 1);
  }
  out.emplace_back(std::move(rows));
  int next_max = (diag == 0 ? m - 1 : hooks.back() - 1);
  next_max = std::min(next_max, m - (diag + 1));
  for (int a = next_max; a >= 0; --a) {
    hooks.push_back(a);
    self_conj_rec(m, diag + 1, hooks, out);
    hooks.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_self_conjugate(int m, bool even_rank_only) {
  std::vector<Partition> out;
  std::vector<int> hooks;
  self_conj_rec(m, 0, hooks, out);
  if (even_rank_only) {
    std::erase_if(out,
                  [](const Partition& p) { return p.diagonal_rank() % 2; });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rho

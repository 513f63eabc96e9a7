#pragma once

#include <compare>
#include <vector>

#include "rho/rational.hpp"

namespace rho {

enum class Family { B, C, D };

// A sorted subset of [m] = {1..m}, the sole representation of parabolic Weyl
// cosets throughout the library.
class SubsetS {
 public:
  SubsetS() = default;
  SubsetS(std::vector<int> elems, int ambient);

  static std::vector<SubsetS> all_subsets(int m);
  static std::vector<SubsetS> subsets_of_size(int m, int r);

  int ambient() const { return m_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool empty() const { return elems_.empty(); }
  const std::vector<int>& elements() const { return elems_; }
  bool contains(int x) const;

  long sigma() const;             // sum of elements
  SubsetS inverse() const;        // {m+1-s : s in S}
  SubsetS complement() const;     // [m] \ S
  SubsetS slice(int parity) const;  // elements == parity mod 2

  long rank_a(int n) const;        // Sigma(S) - n(n+1)/2, requires |S| = n
  long rank_ext() const { return sigma(); }
  long rank_semi_ext() const { return sigma() - size(); }

  bool operator==(const SubsetS&) const = default;
  auto operator<=>(const SubsetS&) const = default;

 private:
  std::vector<int> elems_;
  int m_ = 0;
};

struct SubsetStats {
  long sigma;
  SubsetS complement;
  SubsetS inverse;
  SubsetS odd_slice;
  SubsetS even_slice;
  long rank_ext;
  long rank_semi_ext;
};

SubsetStats subset_stats(const SubsetS& s);

enum class GaleKind { Fixed, Extended, SemiExtended };

// Fixed: componentwise on equal-size subsets. Extended: an order-embedding
// of A into B exists. SemiExtended: same plus |A| = |B| mod 2.
bool gale_leq(GaleKind kind, const SubsetS& a, const SubsetS& b);

// Weakly decreasing nonnegative parts, no trailing zeros.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;  // 0-based, 0 beyond length
  long weight() const;    // number of boxes
  Partition transpose() const;
  bool is_self_conjugate() const { return *this == transpose(); }
  int diagonal_rank() const;  // #{i : parts_i >= i+1}

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// Nested union of the family's hook shapes, one hook h(m+1-s) per s in S,
// the j-th hook anchored on the j-th diagonal box.
// Hooks: C: (i+1,1^{i-1});  D: (i-1,1^{i-1});  B: (i,1^{i-1}).
Partition hook_partition(Family family, const SubsetS& s);

// Lattice-path partition of an n-subset of [2n]:
// (s_n - n, s_{n-1} - n + 1, .., s_1 - 1).
Partition path_partition(const SubsetS& s, int n);

// All self-conjugate partitions inside the m x m box, optionally only those
// with an even number of diagonal boxes; lexicographically sorted.
std::vector<Partition> enumerate_self_conjugate(int m, bool even_rank_only);

}  // namespace rho

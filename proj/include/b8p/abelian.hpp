#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "b8p/common.hpp"

namespace b8p {

// A finite abelian group Z_{n1} x ... x Z_{nk} given by its cyclic factor
// orders, canonically in decreasing order. Elements are dense indices
// 0..order-1 enumerating coordinate tuples lexicographically (first
// coordinate major), so the index doubles as the canonical sort key.
// All arithmetic is table-driven and immutable after construction.
class AbelianGroup {
 public:
  static AbelianGroup make(std::vector<int> factors);

  // Descriptors like "8", "4x2", "2x2x2" (case-insensitive separator).
  static AbelianGroup parse(std::string_view descriptor);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  int rank() const { return static_cast<int>(factors_.size()); }

  // All elements, i.e. 0..order-1 in lexicographic coordinate order.
  std::vector<int> elements() const;

  const std::vector<int>& coords(int x) const { return coords_[x]; }
  int from_coords(const std::vector<int>& c) const;

  int add(int x, int y) const { return add_[x * order_ + y]; }
  int neg(int x) const { return neg_[x]; }
  int element_order(int x) const { return ord_[x]; }

  int zero() const { return 0; }

  bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

  std::string descriptor() const;  // "8", "4x2", ...

 private:
  AbelianGroup() = default;

  int from_coords_raw(const std::vector<int>& c) const {
    int idx = 0;
    for (size_t i = 0; i < c.size(); ++i) idx = idx * factors_[i] + c[i];
    return idx;
  }

  std::vector<int> factors_;
  int order_ = 1;
  std::vector<std::vector<int>> coords_;
  std::vector<int> add_;  // order x order
  std::vector<int> neg_;
  std::vector<int> ord_;
};

// An automorphism, stored as the images of the canonical generators e_i
// together with the induced permutation of element indices. Equality is by
// action: equal image lists.
struct Automorphism {
  std::vector<int> images;  // images[i] = sigma(e_i), element index
  std::vector<int> perm;    // perm[x] = sigma(x)

  bool operator==(const Automorphism& o) const { return images == o.images; }
};

// The full automorphism group, with O(1) composition and inversion via
// precomputed tables. Members are sorted by the lexicographic key of their
// image lists, so indices are deterministic.
class AutGroup {
 public:
  int size() const { return static_cast<int>(members_.size()); }
  int identity() const { return identity_; }
  const Automorphism& member(int a) const { return members_[a]; }

  // compose(a, b) applies b first: result(x) = a(b(x)).
  int compose(int a, int b) const { return comp_[a * size_ + b]; }
  int inverse(int a) const { return inv_[a]; }
  int apply(int a, int x) const { return members_[a].perm[x]; }

  // Index of the member with the given generator images; -1 if absent.
  int find_by_images(const std::vector<int>& images) const;

 private:
  friend AutGroup automorphism_group(const AbelianGroup& g);

  std::vector<Automorphism> members_;
  std::vector<std::uint16_t> comp_;
  std::vector<std::uint16_t> inv_;
  int identity_ = 0;
  int size_ = 0;
};

// apply(sigma, x) without an ambient AutGroup.
inline int apply(const Automorphism& sigma, int x) { return sigma.perm[x]; }

// Brute force over all generator-image tuples that respect generator orders,
// keeping the bijective ones. Complete for every supported group order.
AutGroup automorphism_group(const AbelianGroup& g);

}  // namespace b8p

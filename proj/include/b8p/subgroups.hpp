#pragma once

#include <map>
#include <string>
#include <vector>

#include "b8p/holomorph.hpp"

namespace b8p {

// A subgroup of Hol(E), canonicalized: members sorted by key. Two subgroups
// are equal iff their member lists are.
struct Subgroup {
  std::vector<HolElem> members;     // sorted by HolGroup::key
  std::vector<HolElem> generators;  // witness, optional

  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const { return members < o.members; }
  bool contains(HolElem g) const;
};

// Smallest subgroup containing gens. Throws CapacityError once the closure
// exceeds size_bound (0 means the whole holomorph).
Subgroup closure(const HolGroup& h, const std::vector<HolElem>& gens, int size_bound = 0);

// Regular = |S| = 8 and every non-identity member is fixed-point-free.
bool is_regular(const HolGroup& h, const Subgroup& s);

// All regular subgroups of Hol(E), |E| = 8, in canonical order. Backtracks
// over fixed-point-free elements of 2-power order, anchored on a member of
// maximal order; partial closures are pruned as soon as they contain a
// non-identity element with a fixed point, a repeated translation part, or
// more than 8 elements.
std::vector<Subgroup> enumerate_regular_subgroups(const HolGroup& h, int threads = 1);

// One Aut(E)-conjugacy orbit. Indices refer to the subgroup list the class
// was computed from; the representative is the lexicographically minimal
// orbit member.
struct ConjClass {
  Subgroup representative;
  std::vector<int> orbit;
};

// Partition of subs into Aut-orbits under S -> Phi_nu(S). Throws
// std::logic_error if some conjugate is missing from subs (an enumeration
// bug). Classes are sorted by representative.
std::vector<ConjClass> conjugacy_classes(const HolGroup& h, const std::vector<Subgroup>& subs);

enum class IsoType { C8, C4xC2, C2xC2xC2, D8, Q8 };

inline constexpr IsoType kIsoTypes[] = {IsoType::C8, IsoType::C4xC2, IsoType::C2xC2xC2,
                                        IsoType::D8, IsoType::Q8};

std::string to_string(IsoType t);

// Classification of a group of order 8 by element orders and commutativity.
IsoType iso_type(const HolGroup& h, const Subgroup& s);

// Number of conjugacy classes of regular subgroups per isomorphism type.
std::map<IsoType, int> class_distribution(const HolGroup& h, int threads = 1);

// Text dump, one element per line, compact rendering.
std::string render_subgroup(const HolGroup& h, const Subgroup& s);

}  // namespace b8p

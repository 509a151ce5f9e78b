#pragma once

#include <string>
#include <utility>
#include <vector>

#include "b8p/subgroups.hpp"
#include "b8p/tau.hpp"

namespace b8p {

// Brute-force classifier in Hol(Z_p x E) = Hol(Z_p) x Hol(E). It shares the
// Hol(E) arithmetic with the rest of the library but none of the pair/orbit
// logic, so its class counts are an independent check on the tables.

Hol8pElem holN_identity();
Hol8pElem holN_mul(int p, const HolGroup& h, const Hol8pElem& g, const Hol8pElem& q);
Hol8pElem holN_inv(int p, const HolGroup& h, const Hol8pElem& g);

// action on the 8p points Z_p x E
std::pair<int, int> holN_act(int p, const HolGroup& h, const Hol8pElem& g,
                             std::pair<int, int> pt);

// A regular subgroup of order 8p. Every one contains the full translation
// group of the Z_p factor, so it is determined by its image in
// Z_p^* x Hol(E): eight pairs (k, e), stored sorted.
struct OracleSubgroup {
  int p = 0;
  std::vector<std::pair<int, HolElem>> members;

  int size() const { return static_cast<int>(members.size()); }
  bool operator==(const OracleSubgroup& o) const { return members == o.members; }
  bool operator<(const OracleSubgroup& o) const { return members < o.members; }

  std::vector<Hol8pElem> materialize() const;
};

// every p outside the allowlist raises CapacityError
std::vector<OracleSubgroup> enumerate_regular_8p(int p, const HolGroup& h, int threads = 1);

struct OracleClass {
  OracleSubgroup representative;
  std::vector<int> orbit;
};

std::vector<OracleClass> conjugacy_classes_N(const HolGroup& h,
                                             const std::vector<OracleSubgroup>& subs);

// isomorphism type of the Sylow 2-subgroup (k, e) of the multiplicative group
IsoType oracle_iso_type(const HolGroup& h, const OracleSubgroup& s);

// true when the two subgroups lie in one Aut(Z_p x E) orbit
bool oracle_conjugate(const HolGroup& h, const OracleSubgroup& a, const OracleSubgroup& b);

struct CellCheck {
  IsoType type;
  int oracle = 0;
  int predicted = 0;
  bool match = false;
};

struct GroupCheck {
  std::string descriptor;
  int oracle_classes = 0;
  int predicted = 0;
  std::vector<CellCheck> per_type;
  bool match = false;
};

struct CrossCheck {
  int p = 0;
  std::vector<GroupCheck> groups;
  bool match = false;
};

CrossCheck cross_check(int p, const std::vector<std::string>& descriptors, int threads = 1);

std::string render_oracle_subgroup(const HolGroup& h, const OracleSubgroup& s);

}  // namespace b8p

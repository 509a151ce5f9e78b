#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "b8p/subgroups.hpp"

namespace b8p {

// A homomorphism tau: F -> Z_8 (additive), values aligned with the sorted
// member list of its domain subgroup. Stands for a character F -> Z_p^*:
// tau(g) = zeta_8^{values[g]} under a fixed embedding of the 2-Sylow of
// Z_p^* whenever the image order divides p - 1.
struct TauMap {
  std::vector<std::uint8_t> values;  // values[i] for domain.members[i], mod 8

  int image_order() const;            // |tau(F)|, one of 1, 2, 4, 8
  int kernel_order() const;           // 8 / image_order
  bool operator==(const TauMap& o) const { return values == o.values; }
  bool operator<(const TauMap& o) const { return values < o.values; }
};

// All homomorphisms F -> Z_8, |F| = 8, enumerated via generator images and
// validated on all 64 pairs. Sorted by value vector.
std::vector<TauMap> homomorphisms(const HolGroup& h, const Subgroup& f);

// true iff ker(tau) has order 4 and contains an element of order 4.
bool kernel_cyclic(const HolGroup& h, const Subgroup& f, const TauMap& tau);

// An orbit of pairs (F, tau) under nu . (F, tau) = (Phi_nu(F), tau o Phi_nu^{-1}).
struct PairClass {
  int sub_index = 0;  // representative F, index into the regular-subgroup list
  TauMap tau;         // representative tau on that F
  IsoType type = IsoType::C8;
  int image_order = 1;
  int kernel_order = 8;
  bool klein_kernel = false;  // meaningful when kernel_order = 4
  int orbit_size = 0;
};

// Everything pair counting needs for one E, computed once.
struct HolomorphAnalysis {
  HolGroup hol;
  std::vector<Subgroup> subgroups;    // all regular subgroups, canonical order
  std::vector<ConjClass> classes;     // Aut-conjugacy classes of subgroups
  std::vector<PairClass> pair_classes;

  explicit HolomorphAnalysis(AbelianGroup e, int threads = 1);
};

// Orbits of all pairs (F regular, tau in homomorphisms(F)) under the diagonal
// Aut(E) action, computed over the full subgroup list. Deterministic
// representatives (minimal (F, tau)).
std::vector<PairClass> pair_orbits(const HolGroup& h, const std::vector<Subgroup>& subs);

// Residue class of p mod 8; 3 and 7 admit the same image orders.
enum class Residue { r1, r3, r5, r7 };

Residue residue_of_prime(long long p);
Residue residue_from_int(int r);  // r in {1,3,5,7}
std::string to_string(Residue r);

// image order d admitted for primes in this residue class: d <= 2 always,
// d = 4 needs p = 1 mod 4, d = 8 needs p = 1 mod 8
bool image_order_allowed(Residue r, int d);

inline constexpr const char* kGroupDescriptors[] = {"8", "4x2", "2x2x2"};

// The (E, iso type) count grid for one residue class, plus margins.
struct BraceTable {
  Residue residue = Residue::r1;
  std::array<std::array<int, 5>, 3> cells{};  // [E][type], order as kGroupDescriptors x kIsoTypes
  std::array<int, 3> row_sums{};
  std::array<int, 5> col_sums{};
  int total = 0;
};

BraceTable brace_table(const std::vector<HolomorphAnalysis>& analyses, Residue r);

// Convenience: builds the three analyses itself.
BraceTable brace_table(Residue r, int threads = 1);

// Within one (E, type) cell: counts by kernel order, plus the cyclic/Klein
// split of the order-4 kernels.
struct KernelBreakdown {
  std::map<int, int> by_kernel_order;  // kernel order -> count
  int cyclic4 = 0;
  int klein4 = 0;
};

KernelBreakdown kernel_breakdown(const HolomorphAnalysis& a, IsoType t, Residue r);

// An element (m, k, a, sigma) of Hol(Z_p x E) = (Z_p x| Z_p^*) x Hol(E).
struct Hol8pElem {
  int m = 0;       // translation mod p
  int k = 1;       // unit mod p
  HolElem e;       // (a, sigma) in Hol(E)

  friend auto operator<=>(const Hol8pElem&, const Hol8pElem&) = default;
};

// The explicit subgroup {(m, zeta^{tau(f) d/8}, f)} of Hol(Z_p x E) realizing
// the pair (F, tau) at the prime p. zeta must have multiplicative order equal
// to the image order of tau (zeta = 1 for trivial tau). Output is sorted.
std::vector<Hol8pElem> embed_pair(int p, const HolGroup& h, const Subgroup& f,
                                  const TauMap& tau, int zeta);

// Smallest positive generator of the 2-Sylow subgroup of Z_p^*.
int default_zeta(int p, int image_order);

}  // namespace b8p

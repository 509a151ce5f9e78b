#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "b8p/abelian.hpp"

namespace b8p {

// An element (a, sigma) of Hol(E) = E x| Aut(E). The automorphism is an
// index into the ambient AutGroup so that composition is a table lookup.
struct HolElem {
  std::uint16_t sig = 0;  // automorphism index
  std::uint16_t elt = 0;  // translation part, element index

  friend auto operator<=>(const HolElem&, const HolElem&) = default;
};

// The holomorph of an abelian group: multiplication, inversion, the natural
// action on E, fixed-point tests and conjugation by automorphisms. Built
// once, then read-only.
class HolGroup {
 public:
  explicit HolGroup(AbelianGroup base);

  const AbelianGroup& base() const { return base_; }
  const AutGroup& auts() const { return auts_; }
  int order() const { return base_.order() * auts_.size(); }

  HolElem identity() const { return {static_cast<std::uint16_t>(auts_.identity()), 0}; }

  // (a1, s1)(a2, s2) = (a1 + s1(a2), s1 s2)
  HolElem mul(HolElem g, HolElem h) const {
    return {static_cast<std::uint16_t>(auts_.compose(g.sig, h.sig)),
            static_cast<std::uint16_t>(base_.add(g.elt, auts_.apply(g.sig, h.elt)))};
  }
  HolElem inv(HolElem g) const {
    int si = auts_.inverse(g.sig);
    return {static_cast<std::uint16_t>(si),
            static_cast<std::uint16_t>(base_.neg(auts_.apply(si, g.elt)))};
  }

  int act(HolElem g, int x) const { return base_.add(g.elt, auts_.apply(g.sig, x)); }

  // true iff some x has act(g, x) = x, i.e. the translation part lies in
  // Im(1 - sigma); table precomputed per sigma.
  bool has_fixed_point(HolElem g) const {
    return in_im_one_minus_[g.sig * base_.order() + g.elt] != 0;
  }

  // Phi_nu(a, sigma) = (nu(a), nu sigma nu^{-1})
  HolElem conj_by_aut(int nu, HolElem g) const {
    int s = auts_.compose(nu, auts_.compose(g.sig, auts_.inverse(nu)));
    return {static_cast<std::uint16_t>(s), static_cast<std::uint16_t>(auts_.apply(nu, g.elt))};
  }

  int element_order(HolElem g) const;

  // Canonical key: automorphism index major, translation minor.
  int key(HolElem g) const { return g.sig * base_.order() + g.elt; }
  HolElem from_key(int k) const {
    return {static_cast<std::uint16_t>(k / base_.order()),
            static_cast<std::uint16_t>(k % base_.order())};
  }

  std::vector<HolElem> all_elements() const;

 private:
  AbelianGroup base_;
  AutGroup auts_;
  std::vector<char> in_im_one_minus_;  // auts x elements
};

// Compact textual rendering: "(a, u)" over Z_8 with unit u, "((a,b), r^i s^j)"
// over Z_4 x Z_2, "((a,b,c), [rrr|rrr|rrr])" with a bit-matrix over Z_2^3.
std::string render_element(const HolGroup& h, HolElem g);

// Name for one automorphism in the same style ("5", "r^3s", "[100|011|001]").
std::string render_automorphism(const HolGroup& h, int sig);

}  // namespace b8p

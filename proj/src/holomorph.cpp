#include "b8p/holomorph.hpp"

#include <algorithm>
#include <array>

namespace b8p {

HolGroup::HolGroup(AbelianGroup base) : base_(std::move(base)), auts_(automorphism_group(base_)) {
  const int n = base_.order();
  const int m = auts_.size();
  in_im_one_minus_.assign(static_cast<size_t>(m) * n, 0);
  for (int s = 0; s < m; ++s) {
    for (int x = 0; x < n; ++x) {
      int im = base_.add(x, base_.neg(auts_.apply(s, x)));  // (1 - sigma)(x)
      in_im_one_minus_[s * n + im] = 1;
    }
  }
}

int HolGroup::element_order(HolElem g) const {
  int o = 1;
  HolElem x = g;
  const HolElem e = identity();
  while (x != e) {
    x = mul(x, g);
    ++o;
  }
  return o;
}

std::vector<HolElem> HolGroup::all_elements() const {
  std::vector<HolElem> out;
  out.reserve(order());
  for (int s = 0; s < auts_.size(); ++s)
    for (int a = 0; a < base_.order(); ++a)
      out.push_back({static_cast<std::uint16_t>(s), static_cast<std::uint16_t>(a)});
  return out;
}

namespace {

std::string render_translation(const AbelianGroup& g, int x) {
  const auto& c = g.coords(x);
  if (c.size() == 1) return std::to_string(c[0]);
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  s += ')';
  return s;
}

// Names of Aut(Z_4 x Z_2) = <r, s> as words r^i s^j, resolved against the
// generator images r(a,b) = (a+2b, a+b), s(a,b) = (a, a+b).
std::vector<std::string> dihedral_names(const HolGroup& h) {
  const auto& A = h.auts();
  const auto& E = h.base();
  int r = A.find_by_images({E.from_coords({1, 1}), E.from_coords({2, 1})});
  int s = A.find_by_images({E.from_coords({1, 1}), E.from_coords({0, 1})});
  std::vector<std::string> names(A.size());
  int ri = A.identity();
  for (int i = 0; i < 4; ++i) {
    std::string base = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    names[ri] = base.empty() ? "id" : base;
    names[A.compose(ri, s)] = base + "s";
    ri = A.compose(ri, r);
  }
  return names;
}

std::string matrix_name(const HolGroup& h, int sig) {
  // rows of the matrix whose columns are the generator images
  const auto& E = h.base();
  const auto& im = h.auts().member(sig).images;
  std::string s = "[";
  for (int row = 0; row < 3; ++row) {
    if (row) s += '|';
    for (int col = 0; col < 3; ++col) s += char('0' + E.coords(im[col])[row]);
  }
  s += ']';
  return s;
}

}  // namespace

std::string render_automorphism(const HolGroup& h, int sig) {
  const auto& f = h.base().factors();
  if (f == std::vector<int>{8}) {
    // multiplier: image of the generator 1
    return std::to_string(h.base().coords(h.auts().member(sig).images[0])[0]);
  }
  if (f == std::vector<int>{4, 2}) {
    static thread_local std::vector<std::string> names;
    if (names.size() != static_cast<size_t>(h.auts().size())) names = dihedral_names(h);
    return names[sig];
  }
  if (f == std::vector<int>{2, 2, 2}) return matrix_name(h, sig);
  // generic: list of generator images
  std::string s = "[";
  const auto& im = h.auts().member(sig).images;
  for (size_t i = 0; i < im.size(); ++i) {
    if (i) s += ' ';
    s += render_translation(h.base(), im[i]);
  }
  s += ']';
  return s;
}

std::string render_element(const HolGroup& h, HolElem g) {
  return "(" + render_translation(h.base(), g.elt) + ", " + render_automorphism(h, g.sig) + ")";
}

}  // namespace b8p

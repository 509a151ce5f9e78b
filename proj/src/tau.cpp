#include "b8p/tau.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace b8p {

namespace {

int gcd8(const std::vector<std::uint8_t>& values) {
  int g = 8;
  for (int v : values) g = std::gcd(g, v);
  return g;
}

bool is_odd_prime(int p) {
  if (p < 3 || p % 2 == 0) return false;
  for (int d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

int pow_mod(long long base, long long exp, long long mod) {
  long long r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return static_cast<int>(r);
}

int unit_order(int k, int p) {
  int o = 1;
  long long x = k % p;
  while (x != 1) {
    x = x * k % p;
    ++o;
  }
  return o;
}

// minimal generating set of an order-8 subgroup, greedy over sorted members
std::vector<HolElem> generating_set(const HolGroup& h, const Subgroup& f) {
  std::vector<HolElem> gens;
  Subgroup span;
  span.members = {h.identity()};
  for (HolElem g : f.members) {
    if (span.contains(g)) continue;
    gens.push_back(g);
    span = closure(h, gens, 8);
    if (span.size() == 8) break;
  }
  return gens;
}

}  // namespace

int TauMap::image_order() const { return 8 / gcd8(values); }

int TauMap::kernel_order() const {
  return static_cast<int>(std::count(values.begin(), values.end(), 0));
}

std::vector<TauMap> homomorphisms(const HolGroup& h, const Subgroup& f) {
  if (f.size() != 8) throw std::invalid_argument("homomorphisms expects |F| = 8");
  auto gens = generating_set(h, f);
  auto pos = [&](HolElem g) {
    return static_cast<int>(std::lower_bound(f.members.begin(), f.members.end(), g) -
                            f.members.begin());
  };

  std::set<std::vector<std::uint8_t>> found;
  std::vector<int> pick(gens.size(), 0);
  for (;;) {
    // propagate the picked generator values through the group
    std::vector<int> val(8, -1);
    val[pos(h.identity())] = 0;
    bool ok = true;
    bool grew = true;
    while (grew && ok) {
      grew = false;
      for (int i = 0; i < 8 && ok; ++i) {
        if (val[i] < 0) continue;
        for (size_t gi = 0; gi < gens.size() && ok; ++gi) {
          HolElem y = h.mul(f.members[i], gens[gi]);
          int w = (val[i] + pick[gi]) % 8;
          int j = pos(y);
          if (val[j] < 0) {
            val[j] = w;
            grew = true;
          } else if (val[j] != w) {
            ok = false;
          }
        }
      }
    }
    if (ok)
      for (int v : val) ok = ok && v >= 0;
    if (ok) {
      // validate the homomorphism law on all 64 pairs
      for (int i = 0; i < 8 && ok; ++i)
        for (int j = 0; j < 8 && ok; ++j)
          ok = val[pos(h.mul(f.members[i], f.members[j]))] == (val[i] + val[j]) % 8;
    }
    if (ok) {
      std::vector<std::uint8_t> vv(8);
      for (int i = 0; i < 8; ++i) vv[i] = static_cast<std::uint8_t>(val[i]);
      found.insert(std::move(vv));
    }
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == 8) pick[i++] = 0;
    if (i == pick.size()) break;
  }

  std::vector<TauMap> out;
  for (auto& v : found) out.push_back(TauMap{v});
  return out;
}

bool kernel_cyclic(const HolGroup& h, const Subgroup& f, const TauMap& tau) {
  if (tau.kernel_order() != 4) return false;
  for (int i = 0; i < 8; ++i)
    if (tau.values[i] == 0 && h.element_order(f.members[i]) == 4) return true;
  return false;
}

HolomorphAnalysis::HolomorphAnalysis(AbelianGroup e, int threads) : hol(std::move(e)) {
  subgroups = enumerate_regular_subgroups(hol, threads);
  classes = conjugacy_classes(hol, subgroups);
  pair_classes = pair_orbits(hol, subgroups);
}

std::vector<PairClass> pair_orbits(const HolGroup& h, const std::vector<Subgroup>& subs) {
  std::map<std::vector<HolElem>, int> index;
  for (size_t i = 0; i < subs.size(); ++i) index[subs[i].members] = static_cast<int>(i);

  using Pair = std::pair<int, std::vector<std::uint8_t>>;
  std::vector<Pair> all;
  for (size_t si = 0; si < subs.size(); ++si)
    for (const TauMap& t : homomorphisms(h, subs[si])) all.emplace_back(static_cast<int>(si), t.values);

  std::set<Pair> seen;
  std::vector<PairClass> out;
  std::vector<std::pair<HolElem, std::uint8_t>> img(8);
  for (const Pair& start : all) {
    if (seen.count(start)) continue;
    std::set<Pair> orbit;
    for (int nu = 0; nu < h.auts().size(); ++nu) {
      const Subgroup& f = subs[start.first];
      for (int i = 0; i < 8; ++i) img[i] = {h.conj_by_aut(nu, f.members[i]), start.second[i]};
      std::sort(img.begin(), img.end());
      std::vector<HolElem> mem(8);
      std::vector<std::uint8_t> val(8);
      for (int i = 0; i < 8; ++i) {
        mem[i] = img[i].first;
        val[i] = img[i].second;
      }
      auto it = index.find(mem);
      if (it == index.end()) throw std::logic_error("pair orbit left the subgroup list");
      orbit.emplace(it->second, std::move(val));
    }
    for (const Pair& q : orbit) seen.insert(q);

    const Pair& rep = *orbit.begin();
    PairClass c;
    c.sub_index = rep.first;
    c.tau = TauMap{rep.second};
    c.type = iso_type(h, subs[rep.first]);
    c.image_order = c.tau.image_order();
    c.kernel_order = c.tau.kernel_order();
    c.klein_kernel = c.kernel_order == 4 && !kernel_cyclic(h, subs[rep.first], c.tau);
    c.orbit_size = static_cast<int>(orbit.size());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const PairClass& a, const PairClass& b) {
    if (a.sub_index != b.sub_index) return a.sub_index < b.sub_index;
    return a.tau < b.tau;
  });
  return out;
}

Residue residue_of_prime(long long p) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("expected an odd prime");
  switch (p % 8) {
    case 1: return Residue::r1;
    case 3: return Residue::r3;
    case 5: return Residue::r5;
    default: return Residue::r7;
  }
}

Residue residue_from_int(int r) {
  switch (r) {
    case 1: return Residue::r1;
    case 3: return Residue::r3;
    case 5: return Residue::r5;
    case 7: return Residue::r7;
  }
  throw std::invalid_argument("residue must be one of 1, 3, 5, 7");
}

std::string to_string(Residue r) {
  switch (r) {
    case Residue::r1: return "1 mod 8";
    case Residue::r5: return "5 mod 8";
    default: return "3,7 mod 8";
  }
}

bool image_order_allowed(Residue r, int d) {
  if (d == 1 || d == 2) return true;
  if (d == 4) return r == Residue::r1 || r == Residue::r5;
  if (d == 8) return r == Residue::r1;
  return false;
}

BraceTable brace_table(const std::vector<HolomorphAnalysis>& analyses, Residue r) {
  if (analyses.size() != 3) throw std::invalid_argument("brace_table expects the three analyses");
  BraceTable t;
  t.residue = r;
  for (int e = 0; e < 3; ++e) {
    if (analyses[e].hol.base().descriptor() != kGroupDescriptors[e])
      throw std::invalid_argument("analyses must be ordered 8, 4x2, 2x2x2");
    for (const PairClass& c : analyses[e].pair_classes) {
      if (!image_order_allowed(r, c.image_order)) continue;
      int col = static_cast<int>(std::find(std::begin(kIsoTypes), std::end(kIsoTypes), c.type) -
                                 std::begin(kIsoTypes));
      ++t.cells[e][col];
    }
  }
  for (int e = 0; e < 3; ++e)
    for (int c = 0; c < 5; ++c) {
      t.row_sums[e] += t.cells[e][c];
      t.col_sums[c] += t.cells[e][c];
      t.total += t.cells[e][c];
    }
  return t;
}

BraceTable brace_table(Residue r, int threads) {
  std::vector<HolomorphAnalysis> analyses;
  for (const char* d : kGroupDescriptors) analyses.emplace_back(AbelianGroup::parse(d), threads);
  return brace_table(analyses, r);
}

KernelBreakdown kernel_breakdown(const HolomorphAnalysis& a, IsoType t, Residue r) {
  KernelBreakdown out;
  for (const PairClass& c : a.pair_classes) {
    if (c.type != t || !image_order_allowed(r, c.image_order)) continue;
    ++out.by_kernel_order[c.kernel_order];
    if (c.kernel_order == 4) ++(c.klein_kernel ? out.klein4 : out.cyclic4);
  }
  return out;
}

std::vector<Hol8pElem> embed_pair(int p, const HolGroup& h, const Subgroup& f,
                                  const TauMap& tau, int zeta) {
  if (!is_odd_prime(p)) throw std::invalid_argument("embed_pair needs an odd prime");
  if (p == 3 || p == 7)
    throw std::invalid_argument(
        "p = 3 and p = 7 are out of scope; the counts there are the known "
        "constants 96 and 91");
  if (h.base().order() != 8 || f.size() != 8 || tau.values.size() != 8)
    throw std::invalid_argument("embed_pair needs |E| = |F| = 8 with aligned tau");
  const int d = tau.image_order();
  zeta = ((zeta % p) + p) % p;
  if (zeta == 0 || unit_order(zeta, p) != d)
    throw std::invalid_argument("zeta must have multiplicative order " + std::to_string(d));

  std::vector<Hol8pElem> out;
  out.reserve(8 * p);
  for (int i = 0; i < 8; ++i) {
    int k = pow_mod(zeta, tau.values[i] * d / 8, p);
    for (int m = 0; m < p; ++m) out.push_back({m, k, f.members[i]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int default_zeta(int p, int image_order) {
  if (!is_odd_prime(p)) throw std::invalid_argument("expected an odd prime");
  if (image_order == 1) return 1;
  int s = 1;
  while ((p - 1) % (2 * s) == 0) s *= 2;  // s = order of the 2-Sylow of Z_p^*
  if (s % image_order != 0)
    throw std::invalid_argument("image order " + std::to_string(image_order) +
                                " does not divide the 2-part of p-1");
  for (int g = 2; g < p; ++g) {
    if (unit_order(g, p) == s) return pow_mod(g, s / image_order, p);
  }
  throw std::logic_error("no generator of the 2-Sylow of Z_p^*");
}

}  // namespace b8p

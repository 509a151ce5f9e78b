#include "b8p/subgroups.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

namespace b8p {

bool Subgroup::contains(HolElem g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

Subgroup closure(const HolGroup& h, const std::vector<HolElem>& gens, int size_bound) {
  if (gens.empty()) throw std::invalid_argument("closure needs at least one generator");
  if (size_bound <= 0) size_bound = h.order();

  std::set<HolElem> s;
  s.insert(h.identity());
  for (HolElem g : gens) s.insert(g);
  // product saturation; fine at these sizes
  for (;;) {
    std::vector<HolElem> cur(s.begin(), s.end());
    size_t before = s.size();
    for (HolElem a : cur)
      for (HolElem b : cur) s.insert(h.mul(a, b));
    if (static_cast<int>(s.size()) > size_bound)
      throw CapacityError("closure exceeds size bound " + std::to_string(size_bound));
    if (s.size() == before) break;
  }
  Subgroup out;
  out.members.assign(s.begin(), s.end());
  out.generators = gens;
  return out;
}

bool is_regular(const HolGroup& h, const Subgroup& s) {
  if (s.size() != 8 || h.base().order() != 8) return false;
  const HolElem e = h.identity();
  for (HolElem g : s.members)
    if (g != e && h.has_fixed_point(g)) return false;
  // free + |S| = |E| forces the translation parts to cover E, but the check
  // is cheap and catches closure bugs
  std::set<int> tr;
  for (HolElem g : s.members) tr.insert(g.elt);
  return tr.size() == 8;
}

namespace {

// Closure specialised for the regular-subgroup search: aborts (returns false)
// as soon as the set exceeds 8 elements, contains a non-identity element with
// a fixed point, or repeats a translation part.
class RegularCloser {
 public:
  explicit RegularCloser(const HolGroup& h) : h_(h), in_(h.order(), 0) {}

  bool close(const std::vector<HolElem>& gens, std::vector<HolElem>& out) {
    out.clear();
    mem_.clear();
    for (int k : used_) in_[k] = 0;
    used_.clear();
    trmask_ = 0;
    if (!push(h_.identity())) return false;
    for (HolElem g : gens)
      if (!push(g)) return false;
    for (size_t i = 0; i < mem_.size(); ++i)
      for (size_t j = 0; j < mem_.size(); ++j) {
        if (!push(h_.mul(mem_[i], mem_[j]))) return false;
        if (!push(h_.mul(mem_[j], mem_[i]))) return false;
      }
    out = mem_;
    return true;
  }

 private:
  bool push(HolElem g) {
    int k = h_.key(g);
    if (in_[k]) return true;
    if (mem_.size() == 8) {
      mem_.clear();
      return false;
    }
    if (g != h_.identity() && h_.has_fixed_point(g)) {
      mem_.clear();
      return false;
    }
    if (trmask_ & (1u << g.elt)) {
      mem_.clear();
      return false;
    }
    trmask_ |= 1u << g.elt;
    in_[k] = 1;
    used_.push_back(k);
    mem_.push_back(g);
    return true;
  }

  const HolGroup& h_;
  std::vector<char> in_;
  std::vector<int> used_;
  std::vector<HolElem> mem_;
  std::uint32_t trmask_ = 0;
};

// push(mul) inside the double loop can grow mem_ while iterating; indices
// stay valid because mem_ only grows and the loop bounds re-read size().

void record(std::set<std::vector<HolElem>>& found, std::vector<HolElem> members,
            const std::vector<HolElem>& gens, std::vector<Subgroup>& out) {
  std::sort(members.begin(), members.end());
  if (found.insert(members).second) {
    Subgroup s;
    s.members = std::move(members);
    s.generators = gens;
    out.push_back(std::move(s));
  }
}

struct SearchSlice {
  std::vector<Subgroup> subs;
  std::set<std::vector<HolElem>> seen;
};

}  // namespace

std::vector<Subgroup> enumerate_regular_subgroups(const HolGroup& h, int threads) {
  if (h.base().order() != 8)
    throw std::invalid_argument("regular-subgroup enumeration expects |E| = 8");

  // fixed-point-free candidates of 2-power order, maximal order first
  std::vector<HolElem> cand;
  for (HolElem g : h.all_elements()) {
    if (g == h.identity() || h.has_fixed_point(g)) continue;
    int o = h.element_order(g);
    if (o == 2 || o == 4 || o == 8) cand.push_back(g);
  }
  std::stable_sort(cand.begin(), cand.end(), [&](HolElem a, HolElem b) {
    int oa = h.element_order(a), ob = h.element_order(b);
    if (oa != ob) return oa > ob;
    return h.key(a) < h.key(b);
  });

  std::vector<HolElem> by8, by4, by2;
  for (HolElem g : cand) {
    int o = h.element_order(g);
    (o == 8 ? by8 : o == 4 ? by4 : by2).push_back(g);
  }

  // anchor tasks: an order-8 element alone, an order-4 element (second
  // generator chosen from every candidate), or a commuting order-2 pair
  // extended by a third order-2 element
  auto run_slice = [&](int tid, int nthreads, SearchSlice& slice) {
    RegularCloser closer(h);
    std::vector<HolElem> mem;
    int task = 0;
    for (HolElem g : by8) {
      if (task++ % nthreads != tid) continue;
      if (closer.close({g}, mem) && mem.size() == 8) record(slice.seen, mem, {g}, slice.subs);
    }
    for (HolElem g : by4) {
      if (task++ % nthreads != tid) continue;
      for (HolElem x : cand) {
        if (x == g) continue;
        if (closer.close({g, x}, mem) && mem.size() == 8)
          record(slice.seen, mem, {g, x}, slice.subs);
      }
    }
    for (size_t i = 0; i < by2.size(); ++i) {
      if (task++ % nthreads != tid) continue;
      for (size_t j = i + 1; j < by2.size(); ++j) {
        if (h.mul(by2[i], by2[j]) != h.mul(by2[j], by2[i])) continue;
        if (!closer.close({by2[i], by2[j]}, mem)) continue;
        if (mem.size() != 4) continue;
        std::vector<HolElem> four = mem;
        std::sort(four.begin(), four.end());
        for (size_t k = j + 1; k < by2.size(); ++k) {
          if (std::binary_search(four.begin(), four.end(), by2[k])) continue;
          if (closer.close({by2[i], by2[j], by2[k]}, mem) && mem.size() == 8)
            record(slice.seen, mem, {by2[i], by2[j], by2[k]}, slice.subs);
        }
      }
    }
  };

  threads = std::max(1, threads);
  std::vector<SearchSlice> slices(threads);
  if (threads == 1) {
    run_slice(0, 1, slices[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] { run_slice(t, threads, slices[t]); });
    for (auto& th : pool) th.join();
  }

  // deterministic merge
  std::set<std::vector<HolElem>> seen;
  std::vector<Subgroup> out;
  for (auto& slice : slices)
    for (auto& s : slice.subs)
      if (seen.insert(s.members).second) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ConjClass> conjugacy_classes(const HolGroup& h, const std::vector<Subgroup>& subs) {
  std::map<std::vector<HolElem>, int> index;
  for (size_t i = 0; i < subs.size(); ++i) index[subs[i].members] = static_cast<int>(i);

  std::vector<char> done(subs.size(), 0);
  std::vector<ConjClass> out;
  std::vector<HolElem> img;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (done[i]) continue;
    std::set<int> orbit;
    for (int nu = 0; nu < h.auts().size(); ++nu) {
      img.clear();
      for (HolElem g : subs[i].members) img.push_back(h.conj_by_aut(nu, g));
      std::sort(img.begin(), img.end());
      auto it = index.find(img);
      if (it == index.end())
        throw std::logic_error("conjugate subgroup missing from input list");
      orbit.insert(it->second);
    }
    ConjClass c;
    c.orbit.assign(orbit.begin(), orbit.end());
    int rep = c.orbit.front();
    for (int k : c.orbit)
      if (subs[k].members < subs[rep].members) rep = k;
    c.representative = subs[rep];
    for (int k : c.orbit) done[k] = 1;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

std::string to_string(IsoType t) {
  switch (t) {
    case IsoType::C8: return "C8";
    case IsoType::C4xC2: return "C4xC2";
    case IsoType::C2xC2xC2: return "C2xC2xC2";
    case IsoType::D8: return "D8";
    case IsoType::Q8: return "Q8";
  }
  return "?";
}

IsoType iso_type(const HolGroup& h, const Subgroup& s) {
  if (s.size() != 8) throw std::invalid_argument("iso_type expects a group of order 8");
  int n2 = 0, n8 = 0;
  for (HolElem g : s.members) {
    int o = h.element_order(g);
    if (o == 2) ++n2;
    if (o == 8) ++n8;
  }
  if (n8 > 0) return IsoType::C8;
  bool abelian = true;
  for (HolElem a : s.members) {
    for (HolElem b : s.members)
      if (h.mul(a, b) != h.mul(b, a)) {
        abelian = false;
        break;
      }
    if (!abelian) break;
  }
  if (abelian) return n2 == 7 ? IsoType::C2xC2xC2 : IsoType::C4xC2;
  return n2 == 1 ? IsoType::Q8 : IsoType::D8;
}

std::map<IsoType, int> class_distribution(const HolGroup& h, int threads) {
  auto subs = enumerate_regular_subgroups(h, threads);
  auto classes = conjugacy_classes(h, subs);
  std::map<IsoType, int> out;
  for (IsoType t : kIsoTypes) out[t] = 0;
  for (const auto& c : classes) ++out[iso_type(h, c.representative)];
  return out;
}

std::string render_subgroup(const HolGroup& h, const Subgroup& s) {
  std::string out;
  for (HolElem g : s.members) {
    out += render_element(h, g);
    out += '\n';
  }
  return out;
}

}  // namespace b8p

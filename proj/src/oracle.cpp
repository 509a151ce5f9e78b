#include "b8p/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "b8p/common.hpp"

namespace b8p {

namespace {

constexpr int kAllowedPrimes[] = {5, 11, 13, 17};

int mul_mod(int a, int b, int p) { return static_cast<int>(1LL * a * b % p); }

int inv_mod(int a, int p) {
  int r = 1;
  for (int i = 0; i < p - 2; ++i) r = mul_mod(r, a, p);
  return r;
}

int unit_order(int k, int p) {
  int o = 1;
  int x = k % p;
  while (x != 1) {
    x = mul_mod(x, k, p);
    ++o;
  }
  return o;
}

// One member of the quotient Z_p^* x Hol(E) a regular subgroup projects to.
struct QElem {
  int k;
  HolElem e;
  bool operator==(const QElem& o) const { return k == o.k && e == o.e; }
  bool operator<(const QElem& o) const { return k != o.k ? k < o.k : e < o.e; }
};

// Closure search in Z_p^* x Hol(E) with the regularity conditions applied as
// pruning rules: a member with trivial E-part must be the identity, every
// other E-part must be fixed-point free, and translation parts may not
// repeat. Any violation, or growth past 8, kills the candidate.
class QCloser {
 public:
  QCloser(int p, const HolGroup& h) : p_(p), h_(h), in_(p * h.order(), 0) {}

  bool close(const std::vector<QElem>& gens, std::vector<QElem>& out) {
    mem_.clear();
    for (int c : used_) in_[c] = 0;
    used_.clear();
    trmask_ = 0;
    ok_ = true;
    push({1, h_.identity()});
    for (const QElem& g : gens) push(g);
    for (size_t i = 0; ok_ && i < mem_.size(); ++i)
      for (size_t j = 0; ok_ && j <= i; ++j) {
        push(mul(mem_[i], mem_[j]));
        push(mul(mem_[j], mem_[i]));
      }
    if (!ok_ || mem_.size() != 8) return false;
    out = mem_;
    std::sort(out.begin(), out.end());
    return true;
  }

  QElem mul(const QElem& a, const QElem& b) const {
    return {mul_mod(a.k, b.k, p_), h_.mul(a.e, b.e)};
  }

 private:
  void push(const QElem& g) {
    if (!ok_) return;
    int code = g.k * h_.order() + h_.key(g.e);
    if (in_[code]) return;
    if (g.e == h_.identity()) {
      if (g.k != 1) {
        ok_ = false;
        return;
      }
    } else if (h_.has_fixed_point(g.e)) {
      ok_ = false;
      return;
    }
    std::uint32_t bit = 1u << g.e.elt;
    if (trmask_ & bit) {
      ok_ = false;
      return;
    }
    if (mem_.size() >= 8) {
      ok_ = false;
      return;
    }
    trmask_ |= bit;
    in_[code] = 1;
    used_.push_back(code);
    mem_.push_back(g);
  }

  int p_;
  const HolGroup& h_;
  std::vector<char> in_;
  std::vector<int> used_;
  std::vector<QElem> mem_;
  std::uint32_t trmask_ = 0;
  bool ok_ = true;
};

int qelem_order(int p, const HolGroup& h, const QElem& g) {
  return std::lcm(unit_order(g.k, p), h.element_order(g.e));
}

}  // namespace

Hol8pElem holN_identity() { return {0, 1, {0, 0}}; }

Hol8pElem holN_mul(int p, const HolGroup& h, const Hol8pElem& g, const Hol8pElem& q) {
  return {(g.m + g.k * q.m) % p, mul_mod(g.k, q.k, p), h.mul(g.e, q.e)};
}

Hol8pElem holN_inv(int p, const HolGroup& h, const Hol8pElem& g) {
  int ki = inv_mod(g.k, p);
  return {(p - mul_mod(ki, g.m, p)) % p, ki, h.inv(g.e)};
}

std::pair<int, int> holN_act(int p, const HolGroup& h, const Hol8pElem& g,
                             std::pair<int, int> pt) {
  return {(g.m + g.k * pt.first) % p, h.act(g.e, pt.second)};
}

std::vector<Hol8pElem> OracleSubgroup::materialize() const {
  std::vector<Hol8pElem> out;
  out.reserve(8 * p);
  for (const auto& [k, e] : members)
    for (int m = 0; m < p; ++m) out.push_back({m, k, e});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OracleSubgroup> enumerate_regular_8p(int p, const HolGroup& h, int threads) {
  if (std::find(std::begin(kAllowedPrimes), std::end(kAllowedPrimes), p) ==
      std::end(kAllowedPrimes))
    throw CapacityError("oracle prime must be one of 5, 11, 13, 17");
  if (h.base().order() != 8) throw std::invalid_argument("oracle expects |E| = 8");

  // The translation group of the Z_p factor is the unique Sylow p-subgroup
  // of Hol(Z_p x E) (p does not divide 8 |Aut(E)| (p-1)), so every regular
  // subgroup of order 8p contains it and is the preimage of an 8-element
  // subgroup of Z_p^* x Hol(E) whose members satisfy the QCloser rules.
  std::vector<int> ks;
  for (int k = 1; k < p; ++k) {
    int o = unit_order(k, p);
    if (o == 1 || o == 2 || o == 4 || o == 8) ks.push_back(k);
  }
  std::vector<QElem> cands;
  for (HolElem e : h.all_elements()) {
    if (e == h.identity() || h.has_fixed_point(e)) continue;
    int o = h.element_order(e);
    if (o != 2 && o != 4 && o != 8) continue;
    for (int k : ks) cands.push_back({k, e});
  }
  std::sort(cands.begin(), cands.end());

  std::vector<QElem> by8, by4, by2;
  for (const QElem& g : cands) {
    int o = qelem_order(p, h, g);
    if (o == 8) by8.push_back(g);
    else if (o == 4) by4.push_back(g);
    else if (o == 2) by2.push_back(g);
  }

  // Anchors mirror the order-8 structure: C8 from one order-8 element, the
  // 2-generated types from an order-4 anchor plus a partner of order <= 4,
  // elementary abelian from three commuting involutions.
  int n_tasks = static_cast<int>(by8.size() + by4.size() + by2.size());
  auto run_slice = [&](int slice, int stride, std::set<std::vector<QElem>>& found) {
    QCloser closer(p, h);
    std::vector<QElem> out;
    for (int t = slice; t < n_tasks; t += stride) {
      size_t idx = static_cast<size_t>(t);
      if (idx < by8.size()) {
        if (closer.close({by8[idx]}, out)) found.insert(out);
        continue;
      }
      idx -= by8.size();
      if (idx < by4.size()) {
        const QElem& a = by4[idx];
        for (const QElem& b : by4)
          if (closer.close({a, b}, out)) found.insert(out);
        for (const QElem& b : by2)
          if (closer.close({a, b}, out)) found.insert(out);
        continue;
      }
      idx -= by4.size();
      const QElem& a = by2[idx];
      std::vector<QElem> pair_out;
      for (size_t j = idx + 1; j < by2.size(); ++j) {
        const QElem& b = by2[j];
        if (closer.close({a, b}, pair_out)) {
          // two non-commuting involutions can close into a D8 on their own
          found.insert(pair_out);
          continue;
        }
        if (!(closer.mul(a, b) == closer.mul(b, a))) continue;
        for (size_t l = j + 1; l < by2.size(); ++l)
          if (closer.close({a, b, by2[l]}, out)) found.insert(out);
      }
    }
  };

  int n_threads = std::min(std::max(1, threads), std::max(1, n_tasks));
  std::vector<std::set<std::vector<QElem>>> parts(n_threads);
  if (n_threads <= 1) {
    run_slice(0, 1, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t)
      pool.emplace_back([&, t] { run_slice(t, n_threads, parts[t]); });
    for (auto& th : pool) th.join();
  }

  std::set<std::vector<QElem>> merged;
  for (auto& part : parts) merged.merge(part);
  std::vector<OracleSubgroup> out;
  out.reserve(merged.size());
  for (const auto& mem : merged) {
    OracleSubgroup s;
    s.p = p;
    for (const QElem& g : mem) s.members.emplace_back(g.k, g.e);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// conjugation by (i, nu) scales m, fixes k and maps the E-part through
// Phi_nu; on the quotient profile only nu acts
OracleSubgroup conj_profile(const HolGroup& h, const OracleSubgroup& s, int nu) {
  OracleSubgroup t;
  t.p = s.p;
  t.members.reserve(8);
  for (const auto& [k, e] : s.members) t.members.emplace_back(k, h.conj_by_aut(nu, e));
  std::sort(t.members.begin(), t.members.end());
  return t;
}

}  // namespace

std::vector<OracleClass> conjugacy_classes_N(const HolGroup& h,
                                             const std::vector<OracleSubgroup>& subs) {
  std::map<std::vector<std::pair<int, HolElem>>, int> index;
  for (size_t i = 0; i < subs.size(); ++i) index[subs[i].members] = static_cast<int>(i);

  std::vector<char> seen(subs.size(), 0);
  std::vector<OracleClass> out;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (seen[i]) continue;
    std::set<int> orbit;
    for (int nu = 0; nu < h.auts().size(); ++nu) {
      OracleSubgroup t = conj_profile(h, subs[i], nu);
      auto it = index.find(t.members);
      if (it == index.end())
        throw std::logic_error("conjugate subgroup missing from oracle input list");
      orbit.insert(it->second);
    }
    OracleClass c;
    c.orbit.assign(orbit.begin(), orbit.end());
    int rep = c.orbit[0];
    for (int j : c.orbit) {
      seen[j] = 1;
      if (subs[j].members < subs[rep].members) rep = j;
    }
    c.representative = subs[rep];
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const OracleClass& a, const OracleClass& b) {
    return a.representative.members < b.representative.members;
  });
  return out;
}

IsoType oracle_iso_type(const HolGroup& h, const OracleSubgroup& s) {
  int n2 = 0, n8 = 0;
  for (const auto& [k, e] : s.members) {
    int o = std::lcm(unit_order(k, s.p), h.element_order(e));
    if (o == 2) ++n2;
    if (o == 8) ++n8;
  }
  bool abelian = true;
  for (const auto& [k1, e1] : s.members)
    for (const auto& [k2, e2] : s.members)
      abelian = abelian && h.mul(e1, e2) == h.mul(e2, e1);
  if (n8 > 0) return IsoType::C8;
  if (abelian) return n2 == 7 ? IsoType::C2xC2xC2 : IsoType::C4xC2;
  return n2 == 1 ? IsoType::Q8 : IsoType::D8;
}

bool oracle_conjugate(const HolGroup& h, const OracleSubgroup& a, const OracleSubgroup& b) {
  if (a.p != b.p) return false;
  for (int nu = 0; nu < h.auts().size(); ++nu)
    if (conj_profile(h, a, nu).members == b.members) return true;
  return false;
}

CrossCheck cross_check(int p, const std::vector<std::string>& descriptors, int threads) {
  CrossCheck report;
  report.p = p;
  report.match = true;
  Residue r = residue_of_prime(p);
  for (const std::string& d : descriptors) {
    AbelianGroup e = AbelianGroup::parse(d);
    HolomorphAnalysis analysis(e, threads);

    std::map<IsoType, int> predicted;
    for (const PairClass& c : analysis.pair_classes)
      if (image_order_allowed(r, c.image_order)) ++predicted[c.type];

    auto subs = enumerate_regular_8p(p, analysis.hol, threads);
    auto classes = conjugacy_classes_N(analysis.hol, subs);
    std::map<IsoType, int> observed;
    for (const OracleClass& c : classes) ++observed[oracle_iso_type(analysis.hol, c.representative)];

    GroupCheck g;
    g.descriptor = e.descriptor();
    g.oracle_classes = static_cast<int>(classes.size());
    g.match = true;
    for (IsoType t : kIsoTypes) {
      CellCheck cell;
      cell.type = t;
      cell.oracle = observed.count(t) ? observed[t] : 0;
      cell.predicted = predicted.count(t) ? predicted[t] : 0;
      cell.match = cell.oracle == cell.predicted;
      g.predicted += cell.predicted;
      g.match = g.match && cell.match;
      g.per_type.push_back(cell);
    }
    g.match = g.match && g.oracle_classes == g.predicted;
    report.match = report.match && g.match;
    report.groups.push_back(std::move(g));
  }
  return report;
}

std::string render_oracle_subgroup(const HolGroup& h, const OracleSubgroup& s) {
  std::ostringstream os;
  for (const auto& [k, e] : s.members)
    os << "(m, " << k << ", " << render_element(h, e).substr(1) << "\n";
  return os.str();
}

}  // namespace b8p

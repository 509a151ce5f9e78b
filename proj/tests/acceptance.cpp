// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
//
// Criteria 3 and 6 carry pinned reference values for two table cells that the
// computation does not reproduce (45 and 43 where we count 60 and 28, with
// the independent Hol(Z_p x E) enumeration agreeing with the computed side).
// Those pins are asserted as stated rather than weakened, so the two
// criteria report FAIL with the evidence in the detail line.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "b8p/oracle.hpp"
#include "b8p/report.hpp"

using namespace b8p;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
  std::string detail() const {
    if (pass) return note;
    std::string out = problems.front();
    for (size_t i = 1; i < problems.size(); ++i) out += "; " + problems[i];
    return out;
  }
};

const std::vector<HolomorphAnalysis>& analyses() {
  static std::vector<HolomorphAnalysis> all = [] {
    std::vector<HolomorphAnalysis> v;
    for (const char* d : kGroupDescriptors) v.emplace_back(AbelianGroup::parse(d), 2);
    return v;
  }();
  return all;
}

std::array<int, 5> type_grid(const HolomorphAnalysis& a) {
  std::array<int, 5> grid{};
  for (const auto& c : a.classes)
    for (int t = 0; t < 5; ++t)
      if (iso_type(a.hol, c.representative) == kIsoTypes[t]) ++grid[t];
  return grid;
}

std::string join(const std::array<int, 5>& v) {
  std::string s = "(";
  for (int i = 0; i < 5; ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string join3(const std::array<int, 3>& v) {
  return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")";
}

Outcome criterion1() {
  Outcome o;
  const auto& as = analyses();
  const std::array<int, 3> counts = {5, 14, 8};
  const std::array<std::array<int, 5>, 3> grids = {
      std::array<int, 5>{2, 1, 0, 1, 1},
      std::array<int, 5>{0, 6, 2, 5, 1},
      std::array<int, 5>{0, 3, 2, 2, 1}};
  for (int i = 0; i < 3; ++i) {
    int n = static_cast<int>(as[i].classes.size());
    o.expect(n == counts[i], std::string(kGroupDescriptors[i]) + ": " + std::to_string(n) +
                                 " classes, expected " + std::to_string(counts[i]));
    auto grid = type_grid(as[i]);
    o.expect(grid == grids[i], std::string(kGroupDescriptors[i]) + ": type grid " + join(grid) +
                                   ", expected " + join(grids[i]));
  }
  o.note = "class counts 5/14/8 with type grids (2,1,0,1,1)/(0,6,2,5,1)/(0,3,2,2,1)";
  return o;
}

Outcome criterion2() {
  Outcome o;
  int direct = 0;
  for (const auto& a : analyses())
    for (const auto& pc : a.pair_classes)
      if (pc.image_order == 1) ++direct;
  o.expect(direct == 27, "sum of trivial-tau orbits is " + std::to_string(direct) + ", expected 27");
  o.note = "27 direct-product classes across the three additive groups";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto& as = analyses();
  BraceTable t3 = brace_table(as, Residue::r3);
  BraceTable t5 = brace_table(as, Residue::r5);
  BraceTable t1 = brace_table(as, Residue::r1);
  BraceTable t7 = brace_table(as, Residue::r7);

  o.expect(t3.total == 90, "total at p = 3,7 mod 8 is " + std::to_string(t3.total) + ", expected 90");
  o.expect(t7.total == 90, "total at p = 7 mod 8 is " + std::to_string(t7.total) + ", expected 90");
  o.expect(t5.total == 106, "total at p = 5 mod 8 is " + std::to_string(t5.total) + ", expected 106");
  o.expect(t1.total == 108, "total at p = 1 mod 8 is " + std::to_string(t1.total) + ", expected 108");
  o.expect(t3.col_sums == std::array<int, 5>{4, 33, 13, 31, 9},
           "column sums at p = 3,7 mod 8 are " + join(t3.col_sums) + ", expected (4,33,13,31,9)");
  o.expect(t1.cells[0][0] == 8,
           "cell (Z_8, C8) at p = 1 mod 8 is " + std::to_string(t1.cells[0][0]) + ", expected 8");

  const std::array<int, 3> pinned_rows = {18, 45, 43};
  if (t5.row_sums != pinned_rows) {
    CrossCheck oracle = cross_check(5, {"8", "4x2", "2x2x2"}, 2);
    std::array<int, 3> oracle_rows{};
    for (int g = 0; g < 3; ++g) oracle_rows[g] = oracle.groups[g].oracle_classes;
    o.expect(false, "row sums at p = 5 mod 8 are " + join3(t5.row_sums) +
                        ", pinned reference expects (18,45,43); the independent"
                        " Hol(Z_p x E) enumeration at p = 5 counts " +
                        join3(oracle_rows) + ", agreeing with the computed table");
  }
  o.note = "totals 90/106/108 with all margins";
  return o;
}

Outcome criterion4() {
  Outcome o;
  struct Expect {
    int e;
    IsoType t;
    std::map<int, int> at_r1;
    int cyclic4, klein4;
  };
  const std::vector<Expect> table = {
      {0, IsoType::C8, {{8, 2}, {4, 2}, {2, 2}, {1, 2}}, 2, 0},
      {0, IsoType::C4xC2, {{8, 1}, {4, 3}, {2, 2}}, 2, 1},
      {0, IsoType::C2xC2xC2, {}, 0, 0},
      {0, IsoType::D8, {{8, 1}, {4, 2}}, 1, 1},
      {0, IsoType::Q8, {{8, 1}, {4, 2}}, 2, 0},
      {1, IsoType::C8, {}, 0, 0},
      {1, IsoType::C4xC2, {{8, 6}, {4, 14}, {2, 8}}, 8, 6},
      {1, IsoType::C2xC2xC2, {{8, 2}, {4, 6}}, 0, 6},
      {1, IsoType::D8, {{8, 5}, {4, 15}}, 5, 10},
      {1, IsoType::Q8, {{8, 1}, {4, 3}}, 3, 0},
      {2, IsoType::C8, {}, 0, 0},
      {2, IsoType::C4xC2, {{8, 3}, {4, 6}, {2, 4}}, 3, 3},
      {2, IsoType::C2xC2xC2, {{8, 2}, {4, 3}}, 0, 3},
      {2, IsoType::D8, {{8, 2}, {4, 6}}, 2, 4},
      {2, IsoType::Q8, {{8, 1}, {4, 1}}, 1, 0},
  };
  const auto& as = analyses();
  for (const auto& x : table) {
    std::string where = std::string(kGroupDescriptors[x.e]) + "/" + to_string(x.t);
    auto got = kernel_breakdown(as[x.e], x.t, Residue::r1);
    o.expect(got.by_kernel_order == x.at_r1, where + ": kernel histogram mismatch");
    o.expect(got.cyclic4 == x.cyclic4, where + ": " + std::to_string(got.cyclic4) +
                                           " cyclic order-4 kernels, expected " +
                                           std::to_string(x.cyclic4));
    o.expect(got.klein4 == x.klein4, where + ": " + std::to_string(got.klein4) +
                                         " Klein kernels, expected " + std::to_string(x.klein4));
    std::map<int, int> want5 = x.at_r1, want3 = x.at_r1;
    want5.erase(1);
    want3.erase(1);
    want3.erase(2);
    o.expect(kernel_breakdown(as[x.e], x.t, Residue::r5).by_kernel_order == want5,
             where + ": p = 5 mod 8 histogram mismatch");
    o.expect(kernel_breakdown(as[x.e], x.t, Residue::r3).by_kernel_order == want3,
             where + ": p = 3,7 mod 8 histogram mismatch");
  }
  o.note = "all 15 (E, F) kernel breakdowns match, including the cyclic/Klein splits";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const int p = 5;
  HolGroup h(AbelianGroup::parse("8"));
  int u1 = h.auts().identity();
  int u3 = h.auts().find_by_images({3});
  int u5 = h.auts().find_by_images({5});
  int u7 = h.auts().find_by_images({7});
  auto el = [&](int a, int sig) {
    return HolElem{static_cast<std::uint16_t>(sig), static_cast<std::uint16_t>(a)};
  };
  Subgroup f = closure(h, {el(2, u5), el(1, u7)});
  Subgroup k1 = closure(h, {el(2, u5)});
  Subgroup k2 = closure(h, {el(7, u3)});
  auto tau_for = [&](const Subgroup& k) {
    TauMap t;
    for (HolElem g : f.members) t.values.push_back(k.contains(g) ? 0 : 4);
    return t;
  };
  auto g1 = embed_pair(p, h, f, tau_for(k1), 4);
  auto g2 = embed_pair(p, h, f, tau_for(k2), 4);

  auto expand = [&](const std::vector<std::pair<int, std::pair<int, int>>>& pat) {
    std::vector<Hol8pElem> out;
    for (const auto& [k, au] : pat)
      for (int m = 0; m < p; ++m)
        out.push_back({m, k, HolElem{static_cast<std::uint16_t>(au.second),
                                     static_cast<std::uint16_t>(au.first)}});
    std::sort(out.begin(), out.end());
    return out;
  };
  // patterns (k, (a, sigma)); m runs over Z_p
  auto want1 = expand({{1, {0, u1}}, {1, {2, u5}}, {1, {4, u1}}, {1, {6, u5}},
                       {4, {1, u7}}, {4, {7, u3}}, {4, {5, u7}}, {4, {3, u3}}});
  auto want2 = expand({{1, {0, u1}}, {1, {4, u1}}, {1, {7, u3}}, {1, {3, u3}},
                       {4, {2, u5}}, {4, {6, u5}}, {4, {1, u7}}, {4, {5, u7}}});
  o.expect(g1 == want1, "first embedded subgroup differs from the reference listing");
  o.expect(g2 == want2, "second embedded subgroup differs from the reference listing");

  auto pack = [&](const std::vector<Hol8pElem>& full) {
    OracleSubgroup s;
    s.p = p;
    std::set<std::pair<int, HolElem>> pairs;
    for (const auto& g : full) pairs.insert({g.k, g.e});
    s.members.assign(pairs.begin(), pairs.end());
    return s;
  };
  o.expect(!oracle_conjugate(h, pack(g1), pack(g2)),
           "the two embedded subgroups are conjugate but must not be");
  o.note = "both order-40 subgroups match the reference listings and are non-conjugate";
  return o;
}

Outcome criterion6(bool optin) {
  Outcome o;
  std::map<int, std::array<int, 2>> defaults;  // p -> (Z_8 classes, Z_4 x Z_2 classes)
  for (int p : {5, 13}) {
    CrossCheck c = cross_check(p, {"8", "4x2"}, 2);
    for (const auto& g : c.groups)
      o.expect(g.match, "p = " + std::to_string(p) + ", E = " + g.descriptor +
                            ": oracle " + std::to_string(g.oracle_classes) +
                            " != predicted " + std::to_string(g.predicted));
    defaults[p] = {c.groups[0].oracle_classes, c.groups[1].oracle_classes};
  }
  o.expect(defaults[5] == defaults[13], "p = 5 and p = 13 disagree");

  CrossCheck c11 = cross_check(11, {"8"}, 2);
  o.expect(c11.groups[0].match && c11.groups[0].oracle_classes == 14,
           "p = 11, E = Z_8: " + std::to_string(c11.groups[0].oracle_classes) + ", expected 14");

  o.expect(defaults[5][0] == 18, "p = 5, E = Z_8: " + std::to_string(defaults[5][0]) +
                                     " classes, pinned reference expects 18");
  o.expect(defaults[5][1] == 45,
           "p = 5, E = Z_4 x Z_2: oracle and predicted table agree on " +
               std::to_string(defaults[5][1]) +
               " classes, but the pinned reference expects 45");

  std::string scope = "oracle = predicted at p in {5,13} for Z_8 and Z_4 x Z_2, and 14 at p = 11";
  if (optin) {
    CrossCheck ce = cross_check(5, {"2x2x2"}, 4);
    o.expect(ce.groups[0].match, "p = 5, E = Z_2^3: oracle " +
                                     std::to_string(ce.groups[0].oracle_classes) +
                                     " != predicted " + std::to_string(ce.groups[0].predicted));
    o.expect(ce.groups[0].oracle_classes == 43,
             "p = 5, E = Z_2^3: oracle and predicted table agree on " +
                 std::to_string(ce.groups[0].oracle_classes) +
                 " classes, but the pinned reference expects 43");
    scope += ", opt-in Z_2^3 included";
  }
  o.note = scope;
  return o;
}

Outcome criterion7() {
  Outcome o;

  // holomorph group axioms, exhaustive at orders 32 and 64
  for (const char* d : {"8", "4x2"}) {
    HolGroup h(AbelianGroup::parse(d));
    auto all = h.all_elements();
    bool ok = true;
    for (HolElem a : all) {
      ok = ok && h.mul(a, h.inv(a)) == h.identity() && h.mul(h.identity(), a) == a;
      for (HolElem b : all)
        for (HolElem c : all) ok = ok && h.mul(h.mul(a, b), c) == h.mul(a, h.mul(b, c));
    }
    o.expect(ok, std::string("group axioms fail over ") + d);
  }

  // fixed-point test vs exhaustive scan
  for (const char* d : kGroupDescriptors) {
    HolGroup h(AbelianGroup::parse(d));
    bool ok = true;
    for (HolElem g : h.all_elements()) {
      bool scan = false;
      for (int x = 0; x < 8; ++x) scan = scan || h.act(g, x) == x;
      ok = ok && scan == h.has_fixed_point(g);
    }
    o.expect(ok, std::string("fixed-point test disagrees with scan over ") + d);
  }

  // conjugation by inner translations never leaves the Aut-orbit
  for (const auto& a : analyses()) {
    std::map<Subgroup, int> class_of;
    for (size_t c = 0; c < a.classes.size(); ++c)
      for (int i : a.classes[c].orbit) class_of[a.subgroups[i]] = static_cast<int>(c);
    bool ok = true;
    for (const auto& s : a.subgroups) {
      for (int b = 0; b < 8 && ok; ++b) {
        HolElem t{static_cast<std::uint16_t>(a.hol.auts().identity()),
                  static_cast<std::uint16_t>(b)};
        Subgroup moved;
        for (HolElem g : s.members)
          moved.members.push_back(a.hol.mul(a.hol.mul(t, g), a.hol.inv(t)));
        std::sort(moved.members.begin(), moved.members.end(),
                  [&](HolElem x, HolElem y) { return a.hol.key(x) < a.hol.key(y); });
        ok = class_of.count(moved) == 1 && class_of[moved] == class_of[s];
      }
      if (!ok) break;
    }
    o.expect(ok, "translation conjugacy leaves the automorphism orbit over " +
                     a.hol.base().descriptor());
  }

  // orbit invariance of iso type, image order, kernel order
  for (const auto& a : analyses()) {
    bool ok = true;
    for (const auto& pc : a.pair_classes) {
      const Subgroup& f = a.subgroups[pc.sub_index];
      for (int nu = 0; nu < a.hol.auts().size() && ok; ++nu) {
        std::vector<std::pair<HolElem, std::uint8_t>> moved;
        for (int i = 0; i < 8; ++i)
          moved.push_back({a.hol.conj_by_aut(nu, f.members[i]), pc.tau.values[i]});
        std::sort(moved.begin(), moved.end(), [&](const auto& x, const auto& y) {
          return a.hol.key(x.first) < a.hol.key(y.first);
        });
        Subgroup img;
        TauMap tau;
        for (const auto& [g, v] : moved) {
          img.members.push_back(g);
          tau.values.push_back(v);
        }
        ok = iso_type(a.hol, img) == pc.type && tau.image_order() == pc.image_order &&
             tau.kernel_order() == pc.kernel_order &&
             (pc.kernel_order != 4 || kernel_cyclic(a.hol, img, tau) == !pc.klein_kernel);
      }
      if (!ok) break;
    }
    o.expect(ok, "pair-orbit invariants broken over " + a.hol.base().descriptor());
  }

  // relabeling tau by a unit of Z_8 permutes the homomorphisms of each F
  // preserving image and kernel structure
  for (const auto& a : analyses()) {
    bool ok = true;
    for (const auto& c : a.classes) {
      auto homs = homomorphisms(a.hol, c.representative);
      std::set<TauMap> all(homs.begin(), homs.end());
      for (int u : {3, 5, 7}) {
        std::map<std::pair<int, bool>, int> before, after;
        for (const auto& tau : homs) {
          TauMap scaled;
          for (auto v : tau.values) scaled.values.push_back(static_cast<std::uint8_t>(u * v % 8));
          ok = ok && all.count(scaled) == 1 && scaled.image_order() == tau.image_order();
          bool ck = tau.kernel_order() == 4 && kernel_cyclic(a.hol, c.representative, tau);
          bool sk = scaled.kernel_order() == 4 && kernel_cyclic(a.hol, c.representative, scaled);
          ++before[{tau.image_order(), ck}];
          ++after[{scaled.image_order(), sk}];
        }
        ok = ok && before == after;
      }
      if (!ok) break;
    }
    o.expect(ok, "unit relabeling breaks a bucket over " + a.hol.base().descriptor());
  }

  // the oracle sees identical structure at the two p = 5 mod 8 primes
  for (const char* d : {"8", "4x2"}) {
    HolGroup h(AbelianGroup::parse(d));
    auto s5 = enumerate_regular_8p(5, h, 2);
    auto s13 = enumerate_regular_8p(13, h, 2);
    auto c5 = conjugacy_classes_N(h, s5);
    auto c13 = conjugacy_classes_N(h, s13);
    bool ok = s5.size() == s13.size() && c5.size() == c13.size();
    std::map<IsoType, int> t5, t13;
    for (const auto& c : c5) ++t5[oracle_iso_type(h, c.representative)];
    for (const auto& c : c13) ++t13[oracle_iso_type(h, c.representative)];
    ok = ok && t5 == t13;
    o.expect(ok, std::string("p = 5 and p = 13 oracle structure differs over ") + d);
  }

  o.note = "axioms, fixed points, Hol-vs-Aut conjugacy, orbit and relabeling "
           "invariance, residue invariance: all hold";
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto render_all = [](int threads) {
    std::vector<HolomorphAnalysis> as;
    for (const char* d : kGroupDescriptors) as.emplace_back(AbelianGroup::parse(d), threads);
    std::ostringstream os;
    for (Residue r : {Residue::r1, Residue::r3, Residue::r5, Residue::r7}) {
      os << render_markdown(brace_table(as, r));
      os << render_json(to_json(brace_table(as, r)));
      os << render_csv(report_rows(as, r));
    }
    os << render_json(to_json(cross_check(5, {"8", "4x2"}, threads)));
    return os.str();
  };
  std::string first = render_all(1);
  std::string second = render_all(1);
  o.expect(first == second, "two consecutive runs differ");
  std::string threaded = render_all(4);
  o.expect(first == threaded, "single- and multi-threaded runs differ");
  o.note = "two consecutive full report runs are byte-identical (and thread-count independent)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool optin = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--optin") == 0) {
      optin = true;
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N] [--optin]\n");
      return 2;
    }
  }
  if (only < 0 || only > 8) {
    std::fprintf(stderr, "criterion must be 1..8\n");
    return 2;
  }

  bool all_pass = true;
  for (int n = 1; n <= 8; ++n) {
    if (only != 0 && n != only) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    switch (n) {
      case 1: o = criterion1(); break;
      case 2: o = criterion2(); break;
      case 3: o = criterion3(); break;
      case 4: o = criterion4(); break;
      case 5: o = criterion5(); break;
      case 6: o = criterion6(optin); break;
      case 7: o = criterion7(); break;
      case 8: o = criterion8(); break;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double budget = n == 1 ? 5.0 : n == 3 ? 10.0 : n == 6 ? (optin ? 600.0 : 60.0) : 0.0;
    if (budget > 0 && secs > budget) {
      o.pass = false;
      o.problems.push_back("runtime " + std::to_string(secs) + "s exceeds " +
                           std::to_string(budget) + "s");
    }
    std::printf("%s criterion %d (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", n, secs,
                o.detail().c_str());
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}

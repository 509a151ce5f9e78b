#include "b8p/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

namespace b8p {

int thread_count() {
  const char* env = std::getenv("BRACES8P_THREADS");
  if (env == nullptr) return 1;
  int n = std::atoi(env);
  if (n < 1) return 1;
  return std::min(n, 64);
}

AbelianGroup AbelianGroup::make(std::vector<int> factors) {
  if (factors.empty()) throw std::invalid_argument("abelian group needs at least one factor");
  for (int f : factors) {
    if (f < 2) throw std::invalid_argument("cyclic factor orders must be >= 2");
  }
  std::sort(factors.begin(), factors.end(), std::greater<int>());

  long long order = 1;
  for (int f : factors) {
    order *= f;
    if (order > kMaxGroupOrder)
      throw CapacityError("group order exceeds bound " + std::to_string(kMaxGroupOrder));
  }

  AbelianGroup g;
  g.factors_ = std::move(factors);
  g.order_ = static_cast<int>(order);
  const int n = g.order_;
  const int k = g.rank();

  g.coords_.assign(n, std::vector<int>(k, 0));
  for (int x = 0; x < n; ++x) {
    int rem = x;
    for (int i = k - 1; i >= 0; --i) {
      g.coords_[x][i] = rem % g.factors_[i];
      rem /= g.factors_[i];
    }
  }

  g.add_.assign(static_cast<size_t>(n) * n, 0);
  g.neg_.assign(n, 0);
  g.ord_.assign(n, 1);
  std::vector<int> c(k);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int i = 0; i < k; ++i) c[i] = (g.coords_[x][i] + g.coords_[y][i]) % g.factors_[i];
      g.add_[x * n + y] = g.from_coords_raw(c);
    }
    for (int i = 0; i < k; ++i) c[i] = (g.factors_[i] - g.coords_[x][i]) % g.factors_[i];
    g.neg_[x] = g.from_coords_raw(c);
  }
  for (int x = 0; x < n; ++x) {
    int o = 1, y = x;
    while (y != 0) {
      y = g.add_[y * n + x];
      ++o;
    }
    g.ord_[x] = o;
  }
  return g;
}

int AbelianGroup::from_coords(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != rank())
    throw std::invalid_argument("coordinate tuple has wrong length");
  std::vector<int> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    int m = factors_[i];
    r[i] = ((c[i] % m) + m) % m;
  }
  return from_coords_raw(r);
}

std::vector<int> AbelianGroup::elements() const {
  std::vector<int> out(order_);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

std::string AbelianGroup::descriptor() const {
  std::string s;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(factors_[i]);
  }
  return s;
}

AbelianGroup AbelianGroup::parse(std::string_view d) {
  std::vector<int> factors;
  size_t pos = 0;
  while (pos <= d.size()) {
    size_t next = pos;
    while (next < d.size() && d[next] != 'x' && d[next] != 'X' && d[next] != '*') ++next;
    std::string_view tok = d.substr(pos, next - pos);
    // trim spaces
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size() || v < 2)
      throw std::invalid_argument("bad group descriptor: '" + std::string(d) + "'");
    factors.push_back(v);
    if (next == d.size()) break;
    pos = next + 1;
  }
  return make(std::move(factors));
}

int AutGroup::find_by_images(const std::vector<int>& images) const {
  for (int a = 0; a < size(); ++a)
    if (members_[a].images == images) return a;
  return -1;
}

AutGroup automorphism_group(const AbelianGroup& g) {
  const int n = g.order();
  const int k = g.rank();

  // generator e_i and its admissible images (order dividing factors[i])
  std::vector<std::vector<int>> candidates(k);
  for (int i = 0; i < k; ++i) {
    for (int x = 0; x < n; ++x)
      if (g.factors()[i] % g.element_order(x) == 0) candidates[i].push_back(x);
  }

  std::vector<Automorphism> members;
  std::vector<int> pick(k, 0);
  std::vector<int> perm(n);
  std::vector<char> seen(n);
  for (;;) {
    // linear extension of the picked images
    bool bij = true;
    std::fill(seen.begin(), seen.end(), 0);
    for (int x = 0; x < n && bij; ++x) {
      int img = 0;
      for (int i = 0; i < k; ++i) {
        int c = g.coords(x)[i];
        int im = candidates[i][pick[i]];
        for (int t = 0; t < c; ++t) img = g.add(img, im);
      }
      perm[x] = img;
      if (seen[img]) bij = false;
      seen[img] = 1;
    }
    if (bij) {
      Automorphism a;
      a.images.resize(k);
      for (int i = 0; i < k; ++i) a.images[i] = candidates[i][pick[i]];
      a.perm = perm;
      members.push_back(std::move(a));
    }
    int i = k - 1;
    while (i >= 0 && ++pick[i] == static_cast<int>(candidates[i].size())) pick[i--] = 0;
    if (i < 0) break;
  }

  std::sort(members.begin(), members.end(),
            [](const Automorphism& a, const Automorphism& b) { return a.images < b.images; });

  AutGroup A;
  A.members_ = std::move(members);
  A.size_ = static_cast<int>(A.members_.size());
  const int m = A.size_;

  // locate by permutation for table building
  std::vector<std::pair<std::vector<int>, int>> by_perm(m);
  for (int a = 0; a < m; ++a) by_perm[a] = {A.members_[a].perm, a};
  std::sort(by_perm.begin(), by_perm.end());
  auto locate = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(by_perm.begin(), by_perm.end(), p,
                               [](const auto& e, const std::vector<int>& v) { return e.first < v; });
    return it->second;
  };

  A.comp_.assign(static_cast<size_t>(m) * m, 0);
  A.inv_.assign(m, 0);
  std::vector<int> tmp(n);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int x = 0; x < n; ++x) tmp[x] = A.members_[a].perm[A.members_[b].perm[x]];
      A.comp_[a * m + b] = static_cast<std::uint16_t>(locate(tmp));
    }
    for (int x = 0; x < n; ++x) tmp[A.members_[a].perm[x]] = x;
    A.inv_[a] = static_cast<std::uint16_t>(locate(tmp));
  }
  for (int a = 0; a < m; ++a) {
    bool id = true;
    for (int x = 0; x < n && id; ++x) id = A.members_[a].perm[x] == x;
    if (id) {
      A.identity_ = a;
      break;
    }
  }
  return A;
}

}  // namespace b8p

#include "lspath/orbit.hpp"

#include <algorithm>
#include <numeric>

#include "lspath/errors.hpp"

namespace lspath {

std::optional<std::size_t> OrbitPoset::index_of(const Weight& w) const {
  auto it = index.find(w);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::int64_t OrbitPoset::max_pairing() const {
  std::int64_t best = 0;
  for (const auto& c : covers) best = std::max(best, c.pairing);
  return best;
}

Reachability cover_reachability(const OrbitPoset& P,
                                const std::function<bool(const Cover&)>& keep) {
  const std::size_t n = P.size();
  Reachability below(n, boost::dynamic_bitset<>(n));
  // Elements are sorted by decreasing height, so lower elements come later.
  for (std::size_t y = n; y-- > 0;) {
    for (auto ci : P.covers_below[y]) {
      const Cover& c = P.covers[ci];
      if (!keep(c)) continue;
      below[y].set(c.lower);
      below[y] |= below[c.lower];
    }
  }
  return below;
}

OrbitPoset weyl_orbit_poset(const RootSystem& R, const Weight& mu) {
  if (mu.rank() != R.rank())
    throw InputError("weight (" + to_string(mu) + ") has wrong rank for " + R.label());
  if (!mu.is_dominant())
    throw InputError("weight (" + to_string(mu) + ") is not dominant");

  OrbitPoset P;
  P.base_weight = mu;
  P.elements = weyl_orbit(R, mu);
  std::vector<std::int64_t> key(P.elements.size());
  std::vector<std::size_t> order(P.elements.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = 0; i < key.size(); ++i) key[i] = R.height_key(P.elements[i]);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (key[a] != key[b]) return key[a] > key[b];
    return P.elements[a] > P.elements[b];
  });
  std::vector<Weight> sorted;
  sorted.reserve(order.size());
  for (auto i : order) sorted.push_back(P.elements[i]);
  P.elements = std::move(sorted);
  for (std::size_t i = 0; i < P.elements.size(); ++i) P.index.emplace(P.elements[i], i);

  // Generating relations sigma_alpha(y) < y, then keep those with no
  // intermediate element.
  const std::size_t n = P.size();
  std::vector<std::vector<Cover>> relations(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t a = 0; a < R.num_positive_roots(); ++a) {
      const std::int64_t m = R.pairing(P.elements[y], a);
      if (m <= 0) continue;
      const Weight x = P.elements[y] - m * R.root(a);
      relations[y].push_back(Cover{*P.index_of(x), y, a, m});
    }
  }
  Reachability below(n, boost::dynamic_bitset<>(n));
  for (std::size_t y = n; y-- > 0;) {
    for (const auto& r : relations[y]) {
      below[y].set(r.lower);
      below[y] |= below[r.lower];
    }
  }
  P.covers_below.resize(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (const auto& r : relations[y]) {
      bool saturated = true;
      for (const auto& other : relations[y]) {
        if (other.lower != r.lower && below[other.lower].test(r.lower)) {
          saturated = false;
          break;
        }
      }
      if (!saturated) continue;
      P.covers_below[y].push_back(P.covers.size());
      P.covers.push_back(r);
    }
  }
  return P;
}

}  // namespace lspath

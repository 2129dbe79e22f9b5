#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "lspath/root_system.hpp"
#include "lspath/weight.hpp"

namespace lspath {

/// lower = sigma_alpha(upper), upper - lower = pairing * alpha, pairing > 0.
struct Cover {
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::size_t root = 0;
  std::int64_t pairing = 0;
};

/// The Weyl orbit of a dominant weight with its Bruhat order. Elements are
/// sorted by decreasing height_key, so element 0 is the dominant weight.
struct OrbitPoset {
  Weight base_weight;
  std::vector<Weight> elements;
  std::vector<Cover> covers;
  /// covers_below[y] lists indices into `covers` whose upper end is y.
  std::vector<std::vector<std::size_t>> covers_below;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const Weight& w) const;
  std::int64_t max_pairing() const;

  std::unordered_map<Weight, std::size_t, WeightHash> index;
};

/// below[y] holds every x with x < y using only covers accepted by `keep`.
using Reachability = std::vector<boost::dynamic_bitset<>>;
Reachability cover_reachability(const OrbitPoset& P,
                                const std::function<bool(const Cover&)>& keep);

/// Throws InputError when mu is not dominant.
OrbitPoset weyl_orbit_poset(const RootSystem& R, const Weight& mu);

}  // namespace lspath

#include "lspath/char_oracle.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "lspath/errors.hpp"

namespace lspath {

namespace {

void require_dominant(const RootSystem& R, const Weight& w) {
  if (w.rank() != R.rank())
    throw InputError("weight (" + to_string(w) + ") has wrong rank for " + R.label());
  if (!w.is_dominant()) throw InputError("weight (" + to_string(w) + ") is not dominant");
}

TensorDecomposition brauer_klimyk(const RootSystem& R, const WeightMultiplicityTable& small,
                                  const Weight& big, const Weight& left, const Weight& right) {
  TensorDecomposition out{left, right, {}};
  const Weight shift = big + R.rho();
  for (const auto& [eta, mult] : small.entries) {
    const auto dom = R.to_dominant(shift + eta);
    // On a wall: the term cancels.
    if (std::any_of(dom.weight.coords.begin(), dom.weight.coords.end(),
                    [](std::int64_t c) { return c == 0; }))
      continue;
    const std::int64_t sign = dom.reflections % 2 == 0 ? 1 : -1;
    out.components[dom.weight - R.rho()] += sign * mult;
  }
  for (auto it = out.components.begin(); it != out.components.end();) {
    if (it->second < 0)
      throw InvariantViolation("Brauer-Klimyk produced a negative multiplicity at (" +
                               to_string(it->first) + ")");
    it = it->second == 0 ? out.components.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace

std::int64_t WeightMultiplicityTable::multiplicity(const Weight& nu) const {
  auto it = entries.find(nu);
  return it == entries.end() ? 0 : it->second;
}

std::int64_t WeightMultiplicityTable::dimension() const {
  std::int64_t sum = 0;
  for (const auto& [w, m] : entries) sum += m;
  return sum;
}

std::int64_t weyl_dim(const RootSystem& R, const Weight& lambda) {
  require_dominant(R, lambda);
  const Weight shifted = lambda + R.rho();
  Rational dim = 1;
  for (std::size_t a = 0; a < R.num_positive_roots(); ++a)
    dim *= Rational(R.pairing(shifted, a), R.pairing(R.rho(), a));
  if (!is_integer(dim)) throw InvariantViolation("Weyl dimension is not an integer");
  return dim.numerator();
}

WeightMultiplicityTable weight_multiplicities(const RootSystem& R, const Weight& lambda) {
  require_dominant(R, lambda);

  // All weights of V(lambda): reachable from lambda by lowering with simple
  // roots, staying inside {nu : dominant(nu) <= lambda}.
  std::unordered_map<Weight, bool, WeightHash> is_weight;
  const auto in_module = [&](const Weight& nu) {
    auto it = is_weight.find(nu);
    if (it != is_weight.end()) return it->second;
    const bool ok = R.dominance_leq(R.to_dominant(nu).weight, lambda);
    is_weight.emplace(nu, ok);
    return ok;
  };
  std::vector<Weight> all{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (std::size_t i = 0; i < R.rank(); ++i) {
      Weight next = all[k] - R.root(i);
      if (seen.contains(next) || !in_module(next)) continue;
      seen.insert(next);
      all.push_back(std::move(next));
    }
  }

  std::vector<Weight> dominant;
  for (const auto& w : all)
    if (w.is_dominant()) dominant.push_back(w);
  std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
    return R.height_key(a) > R.height_key(b);
  });

  std::map<Weight, std::int64_t> dominant_mult;
  const auto lookup = [&](const Weight& nu) -> std::int64_t {
    auto it = dominant_mult.find(R.to_dominant(nu).weight);
    return it == dominant_mult.end() ? 0 : it->second;
  };
  const RationalWeight top(lambda + R.rho());
  const Rational top_norm = R.inner_product(top, top);
  for (const auto& nu : dominant) {
    if (nu == lambda) {
      dominant_mult[nu] = 1;
      continue;
    }
    const RationalWeight shifted(nu + R.rho());
    const Rational denominator = top_norm - R.inner_product(shifted, shifted);
    if (denominator == 0) throw InvariantViolation("zero Freudenthal denominator");
    Rational numerator = 0;
    for (std::size_t a = 0; a < R.num_positive_roots(); ++a) {
      const RationalWeight alpha(R.root(a));
      for (std::int64_t k = 1;; ++k) {
        const Weight up = nu + k * R.root(a);
        const std::int64_t m = lookup(up);
        if (m == 0) break;
        numerator += 2 * m * R.inner_product(RationalWeight(up), alpha);
      }
    }
    const Rational mult = numerator / denominator;
    if (!is_integer(mult) || mult < 0)
      throw InvariantViolation("Freudenthal recursion gave " + to_string(mult) + " at (" +
                               to_string(nu) + ")");
    dominant_mult[nu] = mult.numerator();
  }

  WeightMultiplicityTable table{lambda, {}};
  for (const auto& w : all) table.entries[w] = lookup(w);
  return table;
}

TensorDecomposition tensor_decompose_oracle(const RootSystem& R, const Weight& mu,
                                            const Weight& nu) {
  require_dominant(R, mu);
  require_dominant(R, nu);
  if (weyl_dim(R, mu) <= weyl_dim(R, nu))
    return brauer_klimyk(R, weight_multiplicities(R, mu), nu, mu, nu);
  return brauer_klimyk(R, weight_multiplicities(R, nu), mu, mu, nu);
}

std::shared_ptr<const WeightMultiplicityTable> CharOracle::weights(const Weight& lambda) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(lambda); it != tables_.end()) return it->second;
  }
  auto table = std::make_shared<const WeightMultiplicityTable>(weight_multiplicities(R_, lambda));
  std::unique_lock lock(mutex_);
  return tables_.emplace(lambda, std::move(table)).first->second;
}

TensorDecomposition CharOracle::decompose(const Weight& mu, const Weight& nu) const {
  require_dominant(R_, mu);
  require_dominant(R_, nu);
  if (weyl_dim(R_, mu) <= weyl_dim(R_, nu)) return brauer_klimyk(R_, *weights(mu), nu, mu, nu);
  return brauer_klimyk(R_, *weights(nu), mu, mu, nu);
}

}  // namespace lspath

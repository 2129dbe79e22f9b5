#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>

#include "lspath/path_model.hpp"
#include "lspath/root_system.hpp"
#include "lspath/weight.hpp"

namespace lspath {

/// Weight multiplicities of V(highest), every weight of the module listed
/// (not only the dominant ones).
struct WeightMultiplicityTable {
  Weight highest;
  std::map<Weight, std::int64_t> entries;

  std::int64_t multiplicity(const Weight& nu) const;
  std::int64_t dimension() const;
};

/// Weyl dimension formula. Throws InputError for non-dominant lambda.
std::int64_t weyl_dim(const RootSystem& R, const Weight& lambda);

/// Freudenthal's recursion over the dominant weights below lambda, extended
/// to the full weight set by W-invariance.
WeightMultiplicityTable weight_multiplicities(const RootSystem& R, const Weight& lambda);

/// Brauer-Klimyk: for each weight eta of the smaller factor, reflect
/// (other + eta + rho) into the dominant chamber and accumulate with sign.
TensorDecomposition tensor_decompose_oracle(const RootSystem& R, const Weight& mu,
                                            const Weight& nu);

/// Caches weight tables and oracle decompositions for one root system.
class CharOracle {
 public:
  explicit CharOracle(RootSystem R) : R_(std::move(R)) {}

  const RootSystem& root_system() const { return R_; }
  std::shared_ptr<const WeightMultiplicityTable> weights(const Weight& lambda) const;
  TensorDecomposition decompose(const Weight& mu, const Weight& nu) const;

 private:
  RootSystem R_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Weight, std::shared_ptr<const WeightMultiplicityTable>> tables_;
};

}  // namespace lspath

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "lspath/orbit.hpp"
#include "lspath/rational.hpp"
#include "lspath/root_system.hpp"
#include "lspath/weight.hpp"

namespace lspath {

/// mu_0 <_{b_1} mu_1 <_{b_2} ... <_{b_l} mu_l with 0 < b_1 < ... < b_l < 1,
/// all mu_t in the Weyl orbit of `shape`.
struct LSChain {
  Weight shape;
  std::vector<Weight> steps;
  std::vector<Rational> cuts;

  /// The number l of cut points; steps.size() == l + 1.
  std::size_t length() const { return cuts.size(); }

  bool operator==(const LSChain&) const = default;
};

/// Orders chains by steps, then by cuts.
bool operator<(const LSChain& a, const LSChain& b);

/// x <_b y: some saturated chain of covers from x up to y has b * m integral
/// for every cover pairing m. Strict, so b_order_less(P, x, x, b) is false.
/// Throws InputError unless 0 < b <= 1.
bool b_order_less(const OrbitPoset& P, std::size_t x, std::size_t y,
                  const Rational& b);

/// Every b in (0,1) that can occur as a cut: a/d with d at most the largest
/// cover pairing of the orbit, ascending.
std::vector<Rational> candidate_cuts(const OrbitPoset& P);

/// All LS chains of shape P.base_weight, sorted by operator<.
std::vector<LSChain> enumerate_ls_chains(const OrbitPoset& P);
/// Throws InputError for non-dominant mu.
std::vector<LSChain> enumerate_ls_chains(const RootSystem& R, const Weight& mu);

/// Checks chains against one orbit poset, caching the b-Bruhat
/// reachability for every cut value it sees.
class ChainChecker {
 public:
  explicit ChainChecker(const OrbitPoset& P) : P_(P) {}

  /// True when C is an LS chain for the poset. On failure `why` (if given)
  /// says which condition broke.
  bool valid(const LSChain& C, std::string* why = nullptr);

 private:
  const Reachability& reach(const Rational& b);

  const OrbitPoset& P_;
  std::map<Rational, Reachability> reach_;
};

bool is_valid_chain(const OrbitPoset& P, const LSChain& C, std::string* why = nullptr);

/// delta_0 = 0, delta_t = sum_{j<=t} (b_j - b_{j-1}) mu_{j-1}, t = 0..l+1.
std::vector<RationalWeight> delta_sequence(const LSChain& C);

/// omega(C) = delta_{l+1}(C). Throws InvariantViolation if not integral.
Weight chain_endpoint(const LSChain& C);

/// The depth: coordinatewise minimum of the delta sequence. Throws
/// InvariantViolation if the minimum is not integral.
Weight chain_depth(const LSChain& C);

struct TensorDecomposition {
  Weight left;
  Weight right;
  std::map<Weight, std::int64_t> components;

  std::int64_t multiplicity(const Weight& lambda) const;
  bool operator==(const TensorDecomposition&) const = default;
};

/// LS chains of one shape together with their endpoints and depths.
struct ChainTable {
  std::vector<LSChain> chains;
  std::vector<Weight> endpoints;
  std::vector<Weight> depths;
};

/// Path-model computations for a fixed root system, with orbit posets, chain
/// tables and decompositions memoized per weight. Safe to share between
/// threads.
class PathModel {
 public:
  explicit PathModel(RootSystem R);

  const RootSystem& root_system() const { return R_; }

  std::shared_ptr<const OrbitPoset> orbit(const Weight& mu) const;
  std::shared_ptr<const ChainTable> chains(const Weight& mu) const;

  /// m(lambda; mu, nu): chains C of shape mu with nu + depth(C) dominant and
  /// nu + endpoint(C) = lambda.
  std::int64_t multiplicity(const Weight& lambda, const Weight& mu,
                            const Weight& nu) const;
  TensorDecomposition decompose(const Weight& mu, const Weight& nu) const;

 private:
  void check_dominant(const Weight& w) const;

  RootSystem R_;
  mutable std::shared_mutex mutex_;
  mutable std::map<Weight, std::shared_ptr<const OrbitPoset>> orbits_;
  mutable std::map<Weight, std::shared_ptr<const ChainTable>> chains_;
  mutable std::map<std::pair<Weight, Weight>, TensorDecomposition> decompositions_;
};

std::int64_t tensor_multiplicity(const RootSystem& R, const Weight& lambda,
                                 const Weight& mu, const Weight& nu);
TensorDecomposition tensor_decompose(const RootSystem& R, const Weight& mu,
                                     const Weight& nu);

}  // namespace lspath

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "lspath/char_oracle.hpp"
#include "lspath/path_model.hpp"
#include "lspath/renorm.hpp"
#include "lspath/root_system.hpp"

namespace lspath {

/// Which tensor-product decomposition drives the invariant recursion.
enum class Method { path_model, oracle };

/// Path model, oracle and invariant memo for one root system. Thread safe.
class InvariantEngine {
 public:
  explicit InvariantEngine(RootSystem R);

  const RootSystem& root_system() const { return model_.root_system(); }
  const PathModel& path_model() const { return model_; }
  const CharOracle& oracle() const { return oracle_; }

  TensorDecomposition decompose(const Weight& mu, const Weight& nu, Method method) const;

  /// dim (V(l_1) x ... x V(l_n))^G. One factor: [l] = [l == 0]; two:
  /// [l, m] = [m == l*]; more: fold the first two factors through their
  /// tensor decomposition and recurse.
  std::int64_t invariant_dim(std::span<const Weight> weights,
                             Method method = Method::path_model) const;

 private:
  std::int64_t fold(std::vector<Weight> weights, Method method) const;

  PathModel model_;
  CharOracle oracle_;
  mutable std::shared_mutex memo_mutex_;
  mutable std::map<std::pair<int, std::vector<Weight>>, std::int64_t> memo_;
};

/// Engines keyed by root-system label, shared across sweeps.
class Workspace {
 public:
  InvariantEngine& engine(const RootSystem& R);
  InvariantEngine& engine(std::string_view type_label);

 private:
  std::mutex mutex_;
  std::map<std::string, std::unique_ptr<InvariantEngine>> engines_;
};

struct SweepOptions {
  Method method = Method::path_model;
  unsigned workers = 0;  // 0: LSPATH_WORKERS or hardware concurrency
};

struct VerificationRow {
  std::vector<Weight> tuple;
  std::vector<Weight> image;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

struct VerificationReport {
  std::string renormalization;
  std::string source_type;
  std::string target_type;
  std::vector<VerificationRow> rows;
  std::vector<std::size_t> violations;  // indices into rows with lhs > rhs
  std::size_t strict_count = 0;

  bool ok() const { return violations.empty(); }
};

/// For each tuple of source weights compares [tuple] over the source with
/// [phi(tuple)] over the target. Throws InputError for non-dominant or
/// lattice-inadmissible inputs.
VerificationReport verify_inequality(Workspace& ws, const Renormalization& rn,
                                     const std::vector<std::vector<Weight>>& tuples,
                                     const SweepOptions& options = {});

/// [l_1..l_n] <= [p l_1..p l_n] through the frobenius(p) instance.
VerificationReport frobenius_check(Workspace& ws, std::string_view type,
                                   const std::vector<std::vector<Weight>>& tuples, std::int64_t p,
                                   const SweepOptions& options = {});

struct SaturationRow {
  std::vector<RationalWeight> epsilon;  // the tuple in epsilon coordinates
  bool integral = false;                // every entry has integer epsilon coordinates
  std::int64_t spin = 0;                // [l]^{B_l}
  std::optional<std::int64_t> sp;       // [l]^{C_l}, integral tuples only
  std::int64_t sp_doubled = 0;          // [2l]^{C_l}
  std::optional<int> witness_n;         // smallest N in {1,2} with [N l]^{C_l} > 0
};

struct SaturationReport {
  int rank = 0;
  int arity = 0;
  int bound = 0;
  std::vector<SaturationRow> rows;
  std::size_t counterexamples_sp_to_so = 0;   // [l]^C > 0 but [l]^B = 0
  std::size_t counterexamples_spin_to_sp = 0; // [l]^B > 0 but [2l]^C = 0
  std::size_t saturation_witnesses = 0;       // integral, [l]^B > 0, [l]^C = 0, [2l]^C > 0

  bool ok() const { return counterexamples_sp_to_so == 0 && counterexamples_spin_to_sp == 0; }
};

/// All n-tuples of dominant B_l weights with epsilon coordinates at most
/// `bound`, tested for both membership implications between the Sp(2l) and
/// Spin(2l+1) invariant semigroups.
SaturationReport saturation_scan(Workspace& ws, int rank, int arity, int bound,
                                 const SweepOptions& options = {});

/// Dominant weights with every fundamental coordinate in [0, bound].
std::vector<Weight> dominant_box(std::size_t rank, std::int64_t bound);
/// Dominant weights of a type B or C system with first epsilon coordinate
/// (the largest) at most `bound`.
std::vector<Weight> dominant_epsilon_box(const RootSystem& R, std::int64_t bound);
/// All ordered n-tuples drawn from `weights`.
std::vector<std::vector<Weight>> all_tuples(const std::vector<Weight>& weights, std::size_t n);
/// The source weights a sweep of this renormalization uses by default.
std::vector<Weight> default_sweep_weights(const Renormalization& rn, std::int64_t bound);

}  // namespace lspath

#include "lspath/invariants.hpp"

#include <algorithm>

#include "lspath/errors.hpp"
#include "lspath/parallel.hpp"

namespace lspath {

InvariantEngine::InvariantEngine(RootSystem R) : model_(R), oracle_(std::move(R)) {}

TensorDecomposition InvariantEngine::decompose(const Weight& mu, const Weight& nu,
                                               Method method) const {
  return method == Method::oracle ? oracle_.decompose(mu, nu) : model_.decompose(mu, nu);
}

std::int64_t InvariantEngine::invariant_dim(std::span<const Weight> weights, Method method) const {
  if (weights.empty()) throw InputError("invariant_dim needs at least one weight");
  const auto& R = root_system();
  for (const auto& w : weights) {
    if (w.rank() != R.rank())
      throw InputError("weight (" + to_string(w) + ") has wrong rank for " + R.label());
    if (!w.is_dominant()) throw InputError("weight (" + to_string(w) + ") is not dominant");
  }
  return fold(std::vector<Weight>(weights.begin(), weights.end()), method);
}

std::int64_t InvariantEngine::fold(std::vector<Weight> weights, Method method) const {
  if (weights.size() == 1) return weights[0].is_zero() ? 1 : 0;
  if (weights.size() == 2) return weights[1] == dual_weight(root_system(), weights[0]) ? 1 : 0;

  const auto decomposition = decompose(weights[0], weights[1], method);
  std::int64_t total = 0;
  for (const auto& [mu, mult] : decomposition.components) {
    std::vector<Weight> rest{mu};
    rest.insert(rest.end(), weights.begin() + 2, weights.end());
    if (rest.size() <= 2) {
      total += mult * fold(std::move(rest), method);
      continue;
    }
    // Invariant dimensions are symmetric, so suffixes are memoized sorted.
    std::sort(rest.begin(), rest.end());
    auto key = std::make_pair(static_cast<int>(method), rest);
    std::optional<std::int64_t> cached;
    {
      std::shared_lock lock(memo_mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) cached = it->second;
    }
    if (!cached) {
      cached = fold(rest, method);
      std::unique_lock lock(memo_mutex_);
      memo_.emplace(std::move(key), *cached);
    }
    total += mult * *cached;
  }
  return total;
}

InvariantEngine& Workspace::engine(const RootSystem& R) {
  std::lock_guard lock(mutex_);
  auto& slot = engines_[R.label()];
  if (!slot) slot = std::make_unique<InvariantEngine>(R);
  return *slot;
}

InvariantEngine& Workspace::engine(std::string_view type_label) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = engines_.find(std::string(type_label)); it != engines_.end()) return *it->second;
  }
  return engine(build_root_system(type_label));
}

VerificationReport verify_inequality(Workspace& ws, const Renormalization& rn,
                                     const std::vector<std::vector<Weight>>& tuples,
                                     const SweepOptions& options) {
  VerificationReport report;
  report.renormalization = rn.name;
  report.source_type = rn.source.label();
  report.target_type = rn.target.label();
  report.rows.resize(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (tuples[i].empty()) throw InputError("empty weight tuple");
    for (const auto& w : tuples[i]) {
      if (!w.is_dominant()) throw InputError("weight (" + to_string(w) + ") is not dominant");
      report.rows[i].image.push_back(map_weight(rn, w));
    }
    report.rows[i].tuple = tuples[i];
  }
  auto& source = ws.engine(rn.source);
  auto& target = ws.engine(rn.target);
  parallel_for(tuples.size(), options.workers, [&](std::size_t i) {
    auto& row = report.rows[i];
    row.lhs = source.invariant_dim(row.tuple, options.method);
    row.rhs = target.invariant_dim(row.image, options.method);
  });
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (report.rows[i].lhs > report.rows[i].rhs) report.violations.push_back(i);
    if (report.rows[i].lhs < report.rows[i].rhs) ++report.strict_count;
  }
  return report;
}

VerificationReport frobenius_check(Workspace& ws, std::string_view type,
                                   const std::vector<std::vector<Weight>>& tuples, std::int64_t p,
                                   const SweepOptions& options) {
  return verify_inequality(ws, frobenius(type, p), tuples, options);
}

SaturationReport saturation_scan(Workspace& ws, int rank, int arity, int bound,
                                 const SweepOptions& options) {
  if (rank < 2) throw InputError("saturation scan needs rank >= 2");
  if (arity < 1) throw InputError("saturation scan needs at least one factor");
  if (bound < 0) throw InputError("saturation scan needs a nonnegative bound");
  const RootSystem B = build_root_system("B" + std::to_string(rank));
  const RootSystem C = build_root_system("C" + std::to_string(rank));
  auto& spin = ws.engine(B);
  auto& sp = ws.engine(C);

  SaturationReport report;
  report.rank = rank;
  report.arity = arity;
  report.bound = bound;
  const auto tuples = all_tuples(dominant_epsilon_box(B, bound), static_cast<std::size_t>(arity));
  report.rows.resize(tuples.size());
  parallel_for(tuples.size(), options.workers, [&](std::size_t i) {
    auto& row = report.rows[i];
    std::vector<Weight> sp_weights;
    std::vector<Weight> sp_doubled;
    row.integral = true;
    for (const auto& w : tuples[i]) {
      const auto eps = to_epsilon(B, w);
      row.epsilon.push_back(eps);
      if (eps.is_integral()) {
        sp_weights.push_back(from_epsilon(C, eps));
      } else {
        row.integral = false;
      }
      sp_doubled.push_back(from_epsilon(C, Rational(2) * eps));
    }
    row.spin = spin.invariant_dim(tuples[i], options.method);
    if (row.integral) row.sp = sp.invariant_dim(sp_weights, options.method);
    row.sp_doubled = sp.invariant_dim(sp_doubled, options.method);
    if (row.sp && *row.sp > 0) {
      row.witness_n = 1;
    } else if (row.sp_doubled > 0) {
      row.witness_n = 2;
    }
  });
  for (const auto& row : report.rows) {
    if (row.sp && *row.sp > 0 && row.spin == 0) ++report.counterexamples_sp_to_so;
    if (row.spin > 0 && row.sp_doubled == 0) ++report.counterexamples_spin_to_sp;
    if (row.integral && row.spin > 0 && row.sp && *row.sp == 0 && row.sp_doubled > 0)
      ++report.saturation_witnesses;
  }
  return report;
}

std::vector<Weight> dominant_box(std::size_t rank, std::int64_t bound) {
  std::vector<Weight> out;
  if (bound < 0) return out;
  Weight w(rank);
  for (;;) {
    out.push_back(w);
    std::size_t i = 0;
    while (i < rank && ++w[i] > bound) w[i++] = 0;
    if (i == rank) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> dominant_epsilon_box(const RootSystem& R, std::int64_t bound) {
  // The largest epsilon coordinate bounds every fundamental coordinate by 2 *
  // bound (the spin coordinate), so filter a box.
  std::vector<Weight> out;
  for (const auto& w : dominant_box(R.rank(), 2 * bound))
    if (to_epsilon(R, w)[0] <= Rational(bound)) out.push_back(w);
  return out;
}

std::vector<std::vector<Weight>> all_tuples(const std::vector<Weight>& weights, std::size_t n) {
  std::vector<std::vector<Weight>> out;
  if (weights.empty() || n == 0) return out;
  std::vector<std::size_t> idx(n, 0);
  for (;;) {
    std::vector<Weight> tuple;
    for (auto i : idx) tuple.push_back(weights[i]);
    out.push_back(std::move(tuple));
    std::size_t k = n;
    while (k-- > 0) {
      if (++idx[k] < weights.size()) break;
      idx[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<Weight> default_sweep_weights(const Renormalization& rn, std::int64_t bound) {
  const std::string& name = rn.name;
  if (name.starts_with("so_to_sp") || name.starts_with("sp_to_spin"))
    return dominant_epsilon_box(rn.source, bound);
  if (name == "f4") {
    // 0, omega_3, omega_4
    return {Weight{0, 0, 0, 0}, Weight{0, 0, 1, 0}, Weight{0, 0, 0, 1}};
  }
  return dominant_box(rn.source.rank(), bound);
}

}  // namespace lspath

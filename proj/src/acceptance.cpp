#include "lspath/acceptance.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <sstream>

#include "lspath/char_oracle.hpp"
#include "lspath/errors.hpp"
#include "lspath/invariants.hpp"
#include "lspath/parallel.hpp"
#include "lspath/path_model.hpp"
#include "lspath/renorm.hpp"

namespace lspath {
namespace {

constexpr std::array<std::string_view, kCriterionCount> kNames = {
    "oracle-equivalence", "ls-chain-sanity", "sp-so-inequality",  "spin-sp-inequality",
    "g2-inequality",      "f4-inequality",   "chain-transport",   "frobenius-inequality",
    "saturation-scan",    "renorm-validation"};

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::vector<std::pair<std::string, std::int64_t>> oracle_sweep(const AcceptanceConfig& cfg) {
  std::vector<std::pair<std::string, std::int64_t>> out;
  for (const char* t : {"A1", "A2", "B2", "G2"}) out.emplace_back(t, cfg.oracle_bound);
  for (const char* t : {"A3", "B3", "C3"}) out.emplace_back(t, cfg.oracle_bound_rank3);
  return out;
}

Outcome oracle_equivalence(const AcceptanceConfig& cfg, Workspace& ws) {
  std::size_t pairs = 0;
  std::atomic<std::size_t> mismatches{0};
  std::string first;
  std::mutex first_mutex;
  for (const auto& [type, bound] : oracle_sweep(cfg)) {
    auto& engine = ws.engine(type);
    const auto box = dominant_box(engine.root_system().rank(), bound);
    const std::size_t n = box.size();
    pairs += n * n;
    parallel_for(n * n, cfg.workers, [&](std::size_t k) {
      const Weight& mu = box[k / n];
      const Weight& nu = box[k % n];
      if (engine.decompose(mu, nu, Method::path_model) != engine.decompose(mu, nu, Method::oracle)) {
        ++mismatches;
        std::lock_guard lock(first_mutex);
        if (first.empty()) first = type + " (" + to_string(mu) + ") x (" + to_string(nu) + ")";
      }
    });
  }
  std::ostringstream os;
  os << pairs << " pairs, " << mismatches << " mismatches";
  if (!first.empty()) os << ", first at " << first;
  return {mismatches == 0, os.str()};
}

Outcome ls_chain_sanity(const AcceptanceConfig& cfg, Workspace& ws) {
  std::ostringstream os;
  bool ok = true;
  auto& a1 = ws.engine("A1");
  for (std::int64_t m = 0; m <= cfg.chain_max_m; ++m) {
    const auto count = a1.path_model().chains(Weight{m})->chains.size();
    if (count != static_cast<std::size_t>(m + 1)) {
      ok = false;
      os << "|LS(A1, " << m << ")| = " << count << "; ";
    }
  }
  // Depth integrality recomputed from the rational partial sums.
  std::size_t chains = 0;
  std::size_t fractional = 0;
  for (const auto& [type, bound] : oracle_sweep(cfg)) {
    auto& engine = ws.engine(type);
    for (const auto& mu : dominant_box(engine.root_system().rank(), bound)) {
      for (const auto& C : engine.path_model().chains(mu)->chains) {
        ++chains;
        const auto deltas = delta_sequence(C);
        RationalWeight depth = deltas.front();
        for (const auto& d : deltas)
          for (std::size_t i = 0; i < d.rank(); ++i) depth[i] = std::min(depth[i], d[i]);
        if (!depth.is_integral()) ++fractional;
      }
    }
  }
  os << "|LS(A1, m)| " << (ok ? "= m+1" : "wrong") << " for m = 0.." << cfg.chain_max_m << ", "
     << chains << " chains, " << fractional << " with fractional depth";
  if (fractional) ok = false;
  return {ok, os.str()};
}

std::string sweep_detail(const VerificationReport& r) {
  std::ostringstream os;
  os << r.rows.size() << " tuples, " << r.violations.size() << " violations, " << r.strict_count
     << " strict";
  return os.str();
}

Outcome inequality(const AcceptanceConfig& cfg, Workspace& ws, const Renormalization& rn,
                   const std::vector<Weight>& weights) {
  const auto report =
      verify_inequality(ws, rn, all_tuples(weights, cfg.arity), {Method::path_model, cfg.workers});
  return {report.ok(), rn.name + ": " + sweep_detail(report)};
}

Outcome sp_so(const AcceptanceConfig& cfg, Workspace& ws) {
  const auto rn = so_to_sp(2);
  auto report = verify_inequality(ws, rn, all_tuples(dominant_epsilon_box(rn.source, cfg.so_sp_bound), cfg.arity),
                                  {Method::path_model, cfg.workers});
  std::string detail = "height " + std::to_string(cfg.so_sp_bound) + ": " + sweep_detail(report);
  if (report.ok() && report.strict_count == 0 && cfg.so_sp_bound > 0) {
    const auto raised = cfg.so_sp_bound + 1;
    report = verify_inequality(ws, rn, all_tuples(dominant_epsilon_box(rn.source, raised), cfg.arity),
                               {Method::path_model, cfg.workers});
    detail += "; height " + std::to_string(raised) + ": " + sweep_detail(report);
  }
  if (report.strict_count == 0) detail += " (no strict case found)";
  return {report.ok(), detail};
}

Outcome transport(const AcceptanceConfig& cfg, Workspace& ws) {
  std::size_t shapes = 0, chains = 0, bad = 0;
  std::string first;
  for (const auto& rn : {g2_renormalization(), frobenius("A2", 2)}) {
    const auto& src = ws.engine(rn.source).path_model();
    const auto& dst = ws.engine(rn.target).path_model();
    for (const auto& shape : dominant_box(rn.source.rank(), cfg.transport_bound)) {
      const auto r = check_transport(rn, src, dst, shape);
      ++shapes;
      chains += r.source_chains;
      if (!r.ok() || r.source_chains > r.target_chains) {
        ++bad;
        if (first.empty()) first = rn.name + " shape (" + to_string(shape) + ")";
      }
    }
  }
  std::ostringstream os;
  os << shapes << " shapes, " << chains << " chains transported, " << bad << " failing shapes";
  if (!first.empty()) os << ", first " << first;
  return {bad == 0, os.str()};
}

Outcome frobenius_sweep(const AcceptanceConfig& cfg, Workspace& ws) {
  bool ok = true;
  std::ostringstream os;
  for (std::int64_t p : {2, 3}) {
    for (const char* type : {"A2", "B2"}) {
      const auto r = frobenius_check(ws, type, all_tuples(dominant_box(2, cfg.frobenius_bound), cfg.arity),
                                     p, {Method::path_model, cfg.workers});
      ok = ok && r.ok();
      os << type << " p=" << p << ": " << r.violations.size() << "/" << r.rows.size() << "; ";
    }
  }
  std::string s = os.str();
  s.resize(s.size() - 2);
  return {ok, "violations " + s};
}

Outcome saturation(const AcceptanceConfig& cfg, Workspace& ws) {
  const auto r = saturation_scan(ws, 2, static_cast<int>(cfg.arity), cfg.saturation_bound,
                                 {Method::path_model, cfg.workers});
  std::ostringstream os;
  os << r.rows.size() << " tuples, " << r.counterexamples_sp_to_so << " + "
     << r.counterexamples_spin_to_sp << " counterexamples, " << r.saturation_witnesses
     << " tuples needing N = 2";
  return {r.ok(), os.str()};
}

Outcome renorm_validation() {
  static const char* const kInstances[] = {
      "trivial:A2",       "trivial:B2:2",     "short_to_dual:B3", "short_to_dual:C3",
      "short_to_dual:G2", "short_to_dual:F4", "so_to_sp:2",       "so_to_sp:3",
      "sp_to_spin:2",     "sp_to_spin:3",     "f4",               "g2",
      "frobenius:A2:2",   "frobenius:B2:3",   "frobenius:G2:2"};
  std::size_t failed = 0;
  std::string first;
  for (const char* descriptor : kInstances) {
    const auto report = validate(builtin(descriptor));
    if (!report.ok()) {
      ++failed;
      if (first.empty()) {
        first = descriptor;
        for (const auto& c : report.checks)
          if (!c.passed) first += " [" + c.name + "]";
      }
    }
  }
  std::ostringstream os;
  os << std::size(kInstances) << " instances, " << failed << " failing";
  if (!first.empty()) os << ", first " << first;
  return {failed == 0, os.str()};
}

Outcome run_one(int id, const AcceptanceConfig& cfg, Workspace& ws) {
  switch (id) {
    case 1: return oracle_equivalence(cfg, ws);
    case 2: return ls_chain_sanity(cfg, ws);
    case 3: return sp_so(cfg, ws);
    case 4: {
      const auto rn = sp_to_spin(2);
      return inequality(cfg, ws, rn, dominant_epsilon_box(rn.source, cfg.sp_spin_bound));
    }
    case 5: return inequality(cfg, ws, g2_renormalization(), dominant_box(2, cfg.g2_bound));
    case 6: return inequality(cfg, ws, f4_renormalization(), cfg.f4_weights);
    case 7: return transport(cfg, ws);
    case 8: return frobenius_sweep(cfg, ws);
    case 9: return saturation(cfg, ws);
    case 10: return renorm_validation();
  }
  throw InputError("unknown acceptance criterion " + std::to_string(id));
}

}  // namespace

AcceptanceConfig AcceptanceConfig::with_bound(std::int64_t bound) {
  if (bound < 0) throw InputError("acceptance bound must be nonnegative");
  AcceptanceConfig cfg;
  cfg.oracle_bound = cfg.oracle_bound_rank3 = bound;
  cfg.so_sp_bound = cfg.sp_spin_bound = cfg.g2_bound = bound;
  cfg.transport_bound = cfg.frobenius_bound = bound;
  cfg.saturation_bound = static_cast<int>(bound);
  if (bound == 0) cfg.f4_weights = {Weight{0, 0, 0, 0}};
  return cfg;
}

int parse_criterion(std::string_view name) {
  for (int id = 1; id <= kCriterionCount; ++id)
    if (name == std::to_string(id) || name == kNames[id - 1]) return id;
  std::string known;
  for (auto n : kNames) known += std::string(known.empty() ? "" : ", ") + std::string(n);
  throw InputError("unknown acceptance criterion '" + std::string(name) + "' (use 1-10 or one of " +
                   known + ")");
}

std::string criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) throw InputError("criterion id out of range");
  return std::string(kNames[id - 1]);
}

bool AcceptanceReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string format_result(const CriterionResult& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + "  " + (r.id < 10 ? " " : "") +
         std::to_string(r.id) + " " + r.name + ": " + r.detail + " (" + buf + ")";
}

AcceptanceReport run_acceptance_suite(const AcceptanceConfig& config, std::ostream* progress) {
  std::vector<int> ids = config.criteria;
  if (ids.empty())
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  for (int id : ids) criterion_name(id);

  Workspace ws;
  AcceptanceReport report;
  for (int id : ids) {
    CriterionResult r;
    r.id = id;
    r.name = criterion_name(id);
    const auto start = std::chrono::steady_clock::now();
    try {
      const auto outcome = run_one(id, config, ws);
      r.passed = outcome.passed;
      r.detail = outcome.detail;
    } catch (const InvariantViolation& e) {
      r.passed = false;
      r.detail = std::string("invariant violation: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (progress) *progress << format_result(r) << std::endl;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace lspath

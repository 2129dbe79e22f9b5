#include "lspath/path_model.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "lspath/errors.hpp"

namespace lspath {

namespace {

bool integral_multiple(const Rational& b, std::int64_t m) { return is_integer(b * m); }

Reachability b_reachability(const OrbitPoset& P, const Rational& b) {
  return cover_reachability(P, [&](const Cover& c) { return integral_multiple(b, c.pairing); });
}

}  // namespace

bool operator<(const LSChain& a, const LSChain& b) {
  if (a.steps != b.steps) return a.steps < b.steps;
  return std::lexicographical_compare(a.cuts.begin(), a.cuts.end(), b.cuts.begin(),
                                      b.cuts.end());
}

bool b_order_less(const OrbitPoset& P, std::size_t x, std::size_t y, const Rational& b) {
  if (b <= 0 || b > 1)
    throw InputError("b-Bruhat order needs 0 < b <= 1, got " + to_string(b));
  if (x >= P.size() || y >= P.size()) throw InputError("orbit element index out of range");
  return b_reachability(P, b)[y].test(x);
}

std::vector<Rational> candidate_cuts(const OrbitPoset& P) {
  const std::int64_t bound = P.max_pairing();
  std::vector<Rational> cuts;
  for (std::int64_t d = 2; d <= bound; ++d)
    for (std::int64_t a = 1; a < d; ++a)
      if (std::gcd(a, d) == 1) cuts.emplace_back(a, d);
  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

std::vector<LSChain> enumerate_ls_chains(const OrbitPoset& P) {
  const auto cuts = candidate_cuts(P);
  std::vector<Reachability> reach;
  reach.reserve(cuts.size());
  for (const auto& b : cuts) reach.push_back(b_reachability(P, b));

  std::vector<std::vector<std::size_t>> found_steps;
  std::vector<std::vector<std::size_t>> found_cuts;
  // Built top-down, so both vectors are stored in reverse.
  std::vector<std::size_t> steps;
  std::vector<std::size_t> cut_ids;
  const auto emit = [&] {
    found_steps.emplace_back(steps.rbegin(), steps.rend());
    found_cuts.emplace_back(cut_ids.rbegin(), cut_ids.rend());
  };
  const auto extend = [&](auto&& self, std::size_t first, std::size_t upper) -> void {
    for (std::size_t k = 0; k < upper; ++k) {
      const auto& below = reach[k][first];
      for (auto x = below.find_first(); x != below.npos; x = below.find_next(x)) {
        steps.push_back(x);
        cut_ids.push_back(k);
        emit();
        self(self, x, k);
        steps.pop_back();
        cut_ids.pop_back();
      }
    }
  };
  for (std::size_t top = 0; top < P.size(); ++top) {
    steps.assign(1, top);
    cut_ids.clear();
    emit();
    extend(extend, top, cuts.size());
  }

  std::vector<std::size_t> order(found_steps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (found_steps[a] != found_steps[b]) return found_steps[a] < found_steps[b];
    return found_cuts[a] < found_cuts[b];
  });
  std::vector<LSChain> chains;
  chains.reserve(order.size());
  for (auto i : order) {
    LSChain C;
    C.shape = P.base_weight;
    for (auto s : found_steps[i]) C.steps.push_back(P.elements[s]);
    for (auto k : found_cuts[i]) C.cuts.push_back(cuts[k]);
    chains.push_back(std::move(C));
  }
  return chains;
}

std::vector<LSChain> enumerate_ls_chains(const RootSystem& R, const Weight& mu) {
  return enumerate_ls_chains(weyl_orbit_poset(R, mu));
}

const Reachability& ChainChecker::reach(const Rational& b) {
  auto it = reach_.find(b);
  if (it == reach_.end()) it = reach_.emplace(b, b_reachability(P_, b)).first;
  return it->second;
}

bool ChainChecker::valid(const LSChain& C, std::string* why) {
  const auto fail = [&](std::string reason) {
    if (why) *why = std::move(reason);
    return false;
  };
  if (C.shape != P_.base_weight) return fail("shape differs from the orbit's base weight");
  if (C.steps.size() != C.cuts.size() + 1) return fail("need exactly one more step than cuts");
  std::vector<std::size_t> idx;
  for (const auto& s : C.steps) {
    auto i = P_.index_of(s);
    if (!i) return fail("step (" + to_string(s) + ") is not in the orbit");
    idx.push_back(*i);
  }
  Rational previous = 0;
  for (std::size_t t = 0; t < C.cuts.size(); ++t) {
    const Rational& b = C.cuts[t];
    if (b <= previous || b >= 1) return fail("cuts must increase strictly inside (0,1)");
    previous = b;
    if (!reach(b)[idx[t + 1]].test(idx[t]))
      return fail("step " + std::to_string(t) + " is not below step " +
                  std::to_string(t + 1) + " in the " + to_string(b) + "-Bruhat order");
  }
  return true;
}

bool is_valid_chain(const OrbitPoset& P, const LSChain& C, std::string* why) {
  return ChainChecker(P).valid(C, why);
}

std::vector<RationalWeight> delta_sequence(const LSChain& C) {
  const std::size_t rank = C.shape.rank();
  std::vector<RationalWeight> delta;
  delta.reserve(C.steps.size() + 1);
  delta.emplace_back(rank);
  Rational previous = 0;
  for (std::size_t t = 0; t < C.steps.size(); ++t) {
    const Rational next = t < C.cuts.size() ? C.cuts[t] : Rational(1);
    delta.push_back(delta.back() + (next - previous) * RationalWeight(C.steps[t]));
    previous = next;
  }
  return delta;
}

Weight chain_endpoint(const LSChain& C) { return delta_sequence(C).back().to_weight(); }

Weight chain_depth(const LSChain& C) {
  const auto delta = delta_sequence(C);
  RationalWeight depth(C.shape.rank());
  for (const auto& d : delta)
    for (std::size_t i = 0; i < depth.rank(); ++i) depth[i] = std::min(depth[i], d[i]);
  if (!depth.is_integral())
    throw InvariantViolation("depth (" + to_string(depth) + ") of an LS chain is not integral");
  return depth.to_weight();
}

std::int64_t TensorDecomposition::multiplicity(const Weight& lambda) const {
  auto it = components.find(lambda);
  return it == components.end() ? 0 : it->second;
}

PathModel::PathModel(RootSystem R) : R_(std::move(R)) {}

void PathModel::check_dominant(const Weight& w) const {
  if (w.rank() != R_.rank())
    throw InputError("weight (" + to_string(w) + ") has wrong rank for " + R_.label());
  if (!w.is_dominant()) throw InputError("weight (" + to_string(w) + ") is not dominant");
}

std::shared_ptr<const OrbitPoset> PathModel::orbit(const Weight& mu) const {
  check_dominant(mu);
  {
    std::shared_lock lock(mutex_);
    if (auto it = orbits_.find(mu); it != orbits_.end()) return it->second;
  }
  auto poset = std::make_shared<const OrbitPoset>(weyl_orbit_poset(R_, mu));
  std::unique_lock lock(mutex_);
  return orbits_.emplace(mu, std::move(poset)).first->second;
}

std::shared_ptr<const ChainTable> PathModel::chains(const Weight& mu) const {
  check_dominant(mu);
  {
    std::shared_lock lock(mutex_);
    if (auto it = chains_.find(mu); it != chains_.end()) return it->second;
  }
  auto table = std::make_shared<ChainTable>();
  table->chains = enumerate_ls_chains(*orbit(mu));
  for (const auto& C : table->chains) {
    table->endpoints.push_back(chain_endpoint(C));
    table->depths.push_back(chain_depth(C));
  }
  std::unique_lock lock(mutex_);
  return chains_.emplace(mu, std::move(table)).first->second;
}

std::int64_t PathModel::multiplicity(const Weight& lambda, const Weight& mu,
                                     const Weight& nu) const {
  check_dominant(lambda);
  check_dominant(nu);
  const auto table = chains(mu);
  std::int64_t count = 0;
  for (std::size_t k = 0; k < table->chains.size(); ++k) {
    if ((nu + table->endpoints[k]) == lambda && (nu + table->depths[k]).is_dominant()) ++count;
  }
  return count;
}

TensorDecomposition PathModel::decompose(const Weight& mu, const Weight& nu) const {
  check_dominant(nu);
  const auto key = std::make_pair(mu, nu);
  {
    std::shared_lock lock(mutex_);
    if (auto it = decompositions_.find(key); it != decompositions_.end()) return it->second;
  }
  const auto table = chains(mu);
  TensorDecomposition out{mu, nu, {}};
  for (std::size_t k = 0; k < table->chains.size(); ++k) {
    if ((nu + table->depths[k]).is_dominant()) ++out.components[nu + table->endpoints[k]];
  }
  std::unique_lock lock(mutex_);
  return decompositions_.emplace(key, std::move(out)).first->second;
}

std::int64_t tensor_multiplicity(const RootSystem& R, const Weight& lambda, const Weight& mu,
                                 const Weight& nu) {
  return PathModel(R).multiplicity(lambda, mu, nu);
}

TensorDecomposition tensor_decompose(const RootSystem& R, const Weight& mu, const Weight& nu) {
  return PathModel(R).decompose(mu, nu);
}

}  // namespace lspath

// Independent reference computations used to freeze expected values. None of
// these call into the algorithms they are compared against.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lspath/char_oracle.hpp"
#include "lspath/path_model.hpp"
#include "lspath/root_system.hpp"

namespace lspath::testing {

// s_i(nu) = nu - <nu, alpha_i^vee> alpha_i with alpha_i read off the Cartan
// matrix column.
inline Weight naive_simple_reflect(const RootSystem& R, Weight nu, std::size_t i) {
  const auto k = nu[i];
  for (std::size_t j = 0; j < R.rank(); ++j) nu[j] -= k * R.cartan()[j][i];
  return nu;
}

// Orbit of nu under the subgroup generated by the listed simple reflections.
inline std::set<Weight> naive_orbit(const RootSystem& R, const Weight& nu,
                                    const std::vector<std::size_t>& gens) {
  std::set<Weight> seen{nu};
  std::vector<Weight> todo{nu};
  while (!todo.empty()) {
    const Weight w = todo.back();
    todo.pop_back();
    for (auto i : gens) {
      Weight v = naive_simple_reflect(R, w, i);
      if (seen.insert(v).second) todo.push_back(std::move(v));
    }
  }
  return seen;
}

inline std::vector<std::size_t> all_simple(const RootSystem& R) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < R.rank(); ++i) out.push_back(i);
  return out;
}

// Splits a character into irreducibles by repeatedly removing the highest
// dominant weight. Uses only Freudenthal tables, not reflections or chains.
inline std::map<Weight, std::int64_t> peel(const RootSystem& R,
                                           std::map<Weight, std::int64_t> chi) {
  std::map<Weight, std::int64_t> out;
  for (;;) {
    std::erase_if(chi, [](const auto& kv) { return kv.second == 0; });
    if (chi.empty()) break;
    // A dominant weight of maximal height_key is a highest weight.
    const Weight* top = nullptr;
    for (const auto& [w, m] : chi)
      if (w.is_dominant() && (!top || R.height_key(w) > R.height_key(*top))) top = &w;
    const Weight lambda = *top;
    const auto k = chi[lambda];
    out[lambda] += k;
    for (const auto& [w, m] : weight_multiplicities(R, lambda).entries) chi[w] -= k * m;
  }
  return out;
}

inline std::map<Weight, std::int64_t> product_character(const RootSystem& R,
                                                        const std::vector<Weight>& factors) {
  std::map<Weight, std::int64_t> chi{{Weight(R.rank()), 1}};
  for (const auto& f : factors) {
    std::map<Weight, std::int64_t> next;
    for (const auto& [x, m] : chi)
      for (const auto& [y, n] : weight_multiplicities(R, f).entries) next[x + y] += m * n;
    chi = std::move(next);
  }
  return chi;
}

inline std::map<Weight, std::int64_t> peel_decompose(const RootSystem& R, const Weight& mu,
                                                     const Weight& nu) {
  return peel(R, product_character(R, {mu, nu}));
}

// Multiplicity of the trivial representation in the full tensor product.
inline std::int64_t peel_invariants(const RootSystem& R, const std::vector<Weight>& factors) {
  const auto parts = peel(R, product_character(R, factors));
  const auto it = parts.find(Weight(R.rank()));
  return it == parts.end() ? 0 : it->second;
}

// Weyl dimension formula evaluated with a hand-written coroot list in the
// fundamental basis: coroot alpha^vee is given by its simple-coroot
// coefficients, so <lambda, alpha^vee> = sum_i coef_i * lambda_i.
inline std::int64_t naive_dim(const std::vector<std::vector<std::int64_t>>& coroots,
                              const Weight& lambda) {
  // Exact product of rationals, accumulated as a single fraction.
  std::int64_t num = 1, den = 1;
  for (const auto& c : coroots) {
    std::int64_t top = 0, bottom = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      top += c[i] * (lambda[i] + 1);
      bottom += c[i];
    }
    num *= top;
    den *= bottom;
  }
  return num / den;
}

}  // namespace lspath::testing

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lspath/matrix.hpp"
#include "lspath/rational.hpp"
#include "lspath/weight.hpp"

namespace lspath {

/*
  A finite crystallographic root system, described entirely through its
  Cartan matrix. Simple roots are numbered as in Bourbaki's tables.

  Conventions:
    - cartan()(i, j) = <alpha_j, alpha_i^vee>, so alpha_j has
      fundamental-weight coordinates given by column j.
    - Weights live in the fundamental-weight basis, so the pairing of a
      weight with a simple coroot is just the corresponding coordinate.
    - The invariant form is normalized so that short roots in every simple
      component have squared length 2; half_length(i) = <alpha_i,alpha_i>/2.
    - Positive roots are sorted by height; the first rank() of them are the
      simple roots in order.
*/
class RootSystem {
 public:
  /// Builds the root system of a Cartan matrix. The label is informational.
  static RootSystem from_cartan(std::string label, const IntMatrix& cartan);

  const std::string& label() const { return label_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& cartan() const { return cartan_; }
  std::int64_t half_length(std::size_t i) const { return half_lengths_[i]; }

  std::size_t num_positive_roots() const { return roots_.size(); }
  /// Positive root in fundamental-weight coordinates.
  const Weight& root(std::size_t a) const { return roots_[a].weight; }
  /// Coefficients of the root in the simple-root basis.
  const std::vector<std::int64_t>& root_coefficients(std::size_t a) const {
    return roots_[a].coefficients;
  }
  /// Coefficients of the coroot in the simple-coroot basis; these are also
  /// the values <omega_i, alpha^vee>.
  const std::vector<std::int64_t>& coroot_coefficients(std::size_t a) const {
    return roots_[a].coroot;
  }
  /// <alpha, alpha>/2 for the positive root with index a.
  std::int64_t root_half_length(std::size_t a) const { return roots_[a].half_length; }
  std::int64_t height(std::size_t a) const;
  bool is_short(std::size_t a) const;
  bool has_two_root_lengths() const;
  std::size_t highest_root() const;

  /// Index of the positive root with the given fundamental-weight
  /// coordinates, if there is one.
  std::optional<std::size_t> find_positive_root(const Weight& w) const;

  /// rho, the sum of the fundamental weights.
  Weight rho() const { return Weight(std::vector<std::int64_t>(rank_, 1)); }

  /// <lambda, alpha^vee> for the positive root alpha with index a.
  std::int64_t pairing(const Weight& lambda, std::size_t a) const;
  Rational pairing(const RationalWeight& lambda, std::size_t a) const;

  /// sigma_alpha(nu) = nu - <nu, alpha^vee> alpha.
  Weight reflect(const Weight& nu, std::size_t a) const;
  Weight simple_reflect(const Weight& nu, std::size_t i) const;

  /// <nu, 2 rho^vee> = sum of pairings with all positive coroots. Strictly
  /// increases along every relation nu - m alpha < nu with m > 0.
  std::int64_t height_key(const Weight& nu) const;

  /// The dominant element of the Weyl orbit of nu, with the number of simple
  /// reflections used to reach it (its parity is the sign of the element).
  struct DominantForm {
    Weight weight;
    std::size_t reflections = 0;
  };
  DominantForm to_dominant(const Weight& nu) const;

  /// Gram matrix of the fundamental weights under the normalized form.
  const RationalMatrix& fundamental_gram() const { return gram_; }
  Rational inner_product(const RationalWeight& a, const RationalWeight& b) const;

  /// Simple-root coordinates of a weight (rational in general).
  RationalWeight to_root_coordinates(const Weight& w) const;
  /// True when a - b is a nonnegative integer combination of simple roots.
  bool dominance_leq(const Weight& b, const Weight& a) const;

  /// Matrix of sigma_alpha acting on fundamental-weight coordinates.
  RationalMatrix reflection_matrix(std::size_t a) const;

  /// |W| from the product formula prod (ht(alpha)+1)/ht(alpha).
  std::int64_t weyl_group_order() const;

  /// The dual root system R^vee (transposed Cartan matrix).
  RootSystem dual() const;

 private:
  struct PositiveRoot {
    std::vector<std::int64_t> coefficients;
    std::vector<std::int64_t> coroot;
    Weight weight;
    std::int64_t half_length = 0;
  };

  std::string label_;
  std::size_t rank_ = 0;
  IntMatrix cartan_;
  std::vector<std::int64_t> half_lengths_;
  std::vector<PositiveRoot> roots_;
  std::unordered_map<Weight, std::size_t, WeightHash> root_index_;
  RationalMatrix gram_;
  RationalMatrix cartan_inverse_;
};

/// Cartan matrix for a type label such as "A3", "B2", "E6", "G2".
/// Throws InputError for unknown types or ranks out of range.
IntMatrix cartan_matrix(std::string_view type_label);

/// Root system for a type label, Bourbaki numbering.
RootSystem build_root_system(std::string_view type_label);

/// Highest weight of the dual representation, -w0(lambda).
Weight dual_weight(const RootSystem& R, const Weight& lambda);

/// Elements of the Weyl orbit of nu, generated by simple reflections. The
/// order is breadth-first from nu.
std::vector<Weight> weyl_orbit(const RootSystem& R, const Weight& nu);

/// Conversions between fundamental-weight coordinates and the epsilon
/// coordinates of the classical tables, for types B and C.
RationalWeight to_epsilon(const RootSystem& R, const Weight& w);
/// Throws InputError when the type is not B/C or the epsilon vector does not
/// lie in the weight lattice.
Weight from_epsilon(const RootSystem& R, const RationalWeight& eps);

}  // namespace lspath

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lspath/matrix.hpp"
#include "lspath/path_model.hpp"
#include "lspath/root_system.hpp"

namespace lspath {

/// { lambda : sum_i coeffs[i] * lambda_i == 0 (mod modulus) }, in
/// fundamental-weight coordinates.
struct LatticeConstraint {
  std::vector<std::int64_t> coeffs;
  std::int64_t modulus = 1;
  std::string description;

  bool contains(const Weight& w) const;
};

/*
  An integer renormalization (phi, c) from a source root system R' to a
  target root system R: phi maps the source weight space onto the target
  weight space and R' = { c(alpha) phi^{-1}(alpha) : alpha in R }.

  phi is stored as a matrix from source fundamental-weight coordinates to
  target fundamental-weight coordinates. c is indexed by the positive roots
  of the target; root_match[a] is the index of the source positive root
  c(alpha_a) phi^{-1}(alpha_a), or npos if that vector is not a positive
  source root.

  A special isomorphism additionally has every c(alpha) a power of `prime`.
  The optional lattice constraints restrict source and target to the
  character lattices of non simply connected groups.
*/
struct Renormalization {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::string name;
  std::string description;
  RootSystem source;
  RootSystem target;
  RationalMatrix phi;
  std::vector<std::int64_t> c;
  std::vector<std::size_t> root_match;
  std::optional<std::int64_t> prime;
  std::vector<LatticeConstraint> source_lattice;
  std::vector<LatticeConstraint> target_lattice;

  bool in_source_lattice(const Weight& w) const;
  bool in_target_lattice(const Weight& w) const;
};

/// Assembles a renormalization from phi and c and computes root_match.
/// Does not validate.
Renormalization make_renormalization(std::string name, RootSystem source, RootSystem target,
                                     RationalMatrix phi, std::vector<std::int64_t> c);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::string renormalization;
  std::vector<ValidationCheck> checks;

  bool ok() const;
};

/// Checks every defining property of an integer renormalization: the root
/// bijection with compatible positive systems, the coroot pairing identity
/// <phi(l'), alpha^vee> = c(alpha) <l', alpha'^vee>, lattice and dominance
/// preservation, Weyl equivariance, prime-power scalings (when special),
/// sublattice compatibility (when constrained), and that (phi^{-1}, c') is a
/// renormalization between the dual root systems.
ValidationReport validate(const Renormalization& rn);

/// The dual renormalization from R^vee to (R')^vee, acting on coweights by
/// kappa -> kappa o phi.
Renormalization dual_renormalization(const Renormalization& rn);

// Built-in instances.
Renormalization trivial_renormalization(std::string_view type, std::int64_t scale = 1);
/// Identity on the ambient space with c = r on short roots and 1 on long
/// roots; the source is the dual root system. Types B, C, F4, G2.
Renormalization short_to_dual(std::string_view type);
/// Source C_l, target B_l, identity in epsilon coordinates.
Renormalization so_to_sp(int rank);
/// Source B_l, target C_l, doubling in epsilon coordinates.
Renormalization sp_to_spin(int rank);
/// phi(a,b,c,d) = (d, c, 2b, 2a) on F4 fundamental weights.
Renormalization f4_renormalization();
/// phi(a,b) = (3b, a) on G2 fundamental weights.
Renormalization g2_renormalization();
/// Multiplication by a prime p on a single root system, c = p.
Renormalization frobenius(std::string_view type, std::int64_t p);

/// Parses "trivial:A2[:k]", "short_to_dual:B3", "so_to_sp:2",
/// "sp_to_spin:2", "f4", "g2", "frobenius:A2:3". Throws InputError.
Renormalization builtin(std::string_view descriptor);

struct BuiltinInfo {
  std::string syntax;
  std::string summary;
};
std::vector<BuiltinInfo> builtin_catalog();

/// Throws InputError when w is not a source weight (rank, lattice), and
/// InvariantViolation when the image is not a target weight.
Weight map_weight(const Renormalization& rn, const Weight& w);
RationalWeight map_weight(const Renormalization& rn, const RationalWeight& w);

/// Applies phi to each step and keeps the cuts. Throws InvariantViolation
/// when the image is not an LS chain of the target.
LSChain transport_chain(const Renormalization& rn, const LSChain& chain);
/// Same, validating against a caller-owned checker for the target orbit of
/// phi(chain.shape).
LSChain transport_chain(const Renormalization& rn, const LSChain& chain, ChainChecker& target);

struct TransportReport {
  Weight source_shape;
  Weight target_shape;
  std::size_t source_chains = 0;
  std::size_t target_chains = 0;
  std::size_t invalid_images = 0;
  std::size_t collisions = 0;
  std::size_t delta_mismatches = 0;
  std::size_t depth_mismatches = 0;
  std::size_t endpoint_mismatches = 0;

  bool ok() const {
    return invalid_images == 0 && collisions == 0 && delta_mismatches == 0 &&
           depth_mismatches == 0 && endpoint_mismatches == 0;
  }
};

/// Transports every chain of the given source shape and checks validity,
/// injectivity and the equivariance of delta_t, depth and endpoint.
TransportReport check_transport(const Renormalization& rn, const PathModel& source,
                                const PathModel& target, const Weight& shape);

}  // namespace lspath

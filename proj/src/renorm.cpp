#include "lspath/renorm.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "lspath/errors.hpp"

namespace lspath {

bool LatticeConstraint::contains(const Weight& w) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < coeffs.size() && i < w.rank(); ++i) sum += coeffs[i] * w[i];
  return sum % modulus == 0;
}

bool Renormalization::in_source_lattice(const Weight& w) const {
  return std::all_of(source_lattice.begin(), source_lattice.end(),
                     [&](const LatticeConstraint& l) { return l.contains(w); });
}

bool Renormalization::in_target_lattice(const Weight& w) const {
  return std::all_of(target_lattice.begin(), target_lattice.end(),
                     [&](const LatticeConstraint& l) { return l.contains(w); });
}

Renormalization make_renormalization(std::string name, RootSystem source, RootSystem target,
                                     RationalMatrix phi, std::vector<std::int64_t> c) {
  Renormalization rn{std::move(name), {}, std::move(source), std::move(target),
                     std::move(phi),  std::move(c), {}, std::nullopt, {}, {}};
  rn.root_match.assign(rn.target.num_positive_roots(), Renormalization::npos);
  if (!rn.phi.is_invertible() || rn.c.size() != rn.target.num_positive_roots()) return rn;
  const RationalMatrix inverse = rn.phi.inverse();
  for (std::size_t a = 0; a < rn.target.num_positive_roots(); ++a) {
    const RationalWeight image = Rational(rn.c[a]) * inverse.apply(rn.target.root(a));
    if (!image.is_integral()) continue;
    if (auto idx = rn.source.find_positive_root(image.to_weight())) rn.root_match[a] = *idx;
  }
  return rn;
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

ValidationCheck check(std::string name, bool passed, std::string detail = {}) {
  return ValidationCheck{std::move(name), passed, std::move(detail)};
}

// The checks that make sense for any (phi, c) pair, dual or not.
std::vector<ValidationCheck> core_checks(const Renormalization& rn) {
  std::vector<ValidationCheck> out;
  const auto& R = rn.target;
  const auto& Rs = rn.source;
  const std::size_t n = R.rank();

  const bool invertible =
      Rs.rank() == n && rn.phi.rows() == n && rn.phi.cols() == n && rn.phi.is_invertible();
  out.push_back(check("phi invertible", invertible,
                      invertible ? "" : "phi is not an invertible map between equal ranks"));
  if (!invertible) return out;

  {
    std::string detail;
    bool ok = Rs.num_positive_roots() == R.num_positive_roots() &&
              rn.c.size() == R.num_positive_roots();
    if (!ok) detail = "positive root counts differ";
    std::set<std::size_t> hit;
    for (std::size_t a = 0; ok && a < R.num_positive_roots(); ++a) {
      if (rn.c[a] <= 0) {
        ok = false;
        detail = "c(alpha) must be a positive integer";
      } else if (rn.root_match[a] == Renormalization::npos) {
        ok = false;
        detail = "c(alpha) phi^-1(alpha) is not a positive source root for alpha = (" +
                 to_string(R.root(a)) + ")";
      } else if (!hit.insert(rn.root_match[a]).second) {
        ok = false;
        detail = "two target roots map to the same source root";
      }
    }
    out.push_back(check("root bijection", ok, detail));
    if (!ok) return out;
  }

  {
    std::string detail;
    bool ok = true;
    for (std::size_t a = 0; ok && a < R.num_positive_roots(); ++a) {
      const auto& source_coroot = Rs.coroot_coefficients(rn.root_match[a]);
      for (std::size_t i = 0; i < n; ++i) {
        RationalWeight column(n);
        for (std::size_t k = 0; k < n; ++k) column[k] = rn.phi(k, i);
        const Rational lhs = R.pairing(column, a);
        const Rational rhs = Rational(rn.c[a] * source_coroot[i]);
        if (lhs != rhs) {
          ok = false;
          detail = "<phi(omega'_" + std::to_string(i + 1) + "), alpha^vee> = " + to_string(lhs) +
                   " but c(alpha) <omega'_" + std::to_string(i + 1) + ", alpha'^vee> = " +
                   to_string(rhs) + " for alpha = (" + to_string(R.root(a)) + ")";
          break;
        }
      }
    }
    out.push_back(check("coroot pairing identity", ok, detail));
  }

  out.push_back(check("maps weight lattice into weight lattice", rn.phi.is_integral(),
                      rn.phi.is_integral() ? "" : "phi has non-integral entries"));

  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rn.phi(i, j) < 0) ok = false;
    out.push_back(check("maps dominant weights to dominant weights", ok,
                        ok ? "" : "some phi(omega'_i) is not dominant"));
  }
  return out;
}

}  // namespace

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

Renormalization dual_renormalization(const Renormalization& rn) {
  RootSystem dual_source = rn.target.dual();
  RootSystem dual_target = rn.source.dual();
  const RationalMatrix a(rn.target.cartan());
  const RationalMatrix a_src(rn.source.cartan());
  RationalMatrix phi = rn.phi.is_invertible()
                           ? a_src.transpose() * rn.phi.transpose() * a.transpose().inverse()
                           : RationalMatrix(rn.phi.rows(), rn.phi.cols());

  // Positive roots of (R')^vee are the source coroots; c' copies c through
  // the root matching.
  std::map<std::vector<std::int64_t>, std::size_t> source_by_coroot;
  for (std::size_t k = 0; k < rn.source.num_positive_roots(); ++k)
    source_by_coroot.emplace(rn.source.coroot_coefficients(k), k);
  std::vector<std::int64_t> c_dual(dual_target.num_positive_roots(), 0);
  for (std::size_t b = 0; b < dual_target.num_positive_roots(); ++b) {
    auto it = source_by_coroot.find(dual_target.root_coefficients(b));
    if (it == source_by_coroot.end()) continue;
    for (std::size_t t = 0; t < rn.root_match.size(); ++t)
      if (rn.root_match[t] == it->second) c_dual[b] = rn.c[t];
  }
  return make_renormalization(rn.name + "^vee", std::move(dual_source), std::move(dual_target),
                              std::move(phi), std::move(c_dual));
}

ValidationReport validate(const Renormalization& rn) {
  ValidationReport report{rn.name, core_checks(rn)};
  if (!report.ok()) return report;
  const auto& R = rn.target;
  const auto& Rs = rn.source;

  {
    bool ok = true;
    std::string detail;
    for (std::size_t a = 0; ok && a < R.num_positive_roots(); ++a) {
      if (rn.phi * Rs.reflection_matrix(rn.root_match[a]) != R.reflection_matrix(a) * rn.phi) {
        ok = false;
        detail = "phi does not intertwine the reflections of (" + to_string(R.root(a)) + ")";
      }
    }
    report.checks.push_back(check("Weyl equivariance", ok, detail));
  }

  if (rn.prime) {
    const std::int64_t p = *rn.prime;
    bool ok = is_prime(p);
    std::set<std::int64_t> exponents;
    for (std::size_t a = 0; ok && a < R.num_positive_roots(); ++a) {
      std::int64_t value = rn.c[a];
      std::int64_t d = 0;
      while (value % p == 0) {
        value /= p;
        ++d;
      }
      if (value != 1) ok = false;
      exponents.insert(d);
    }
    std::string detail = "p = " + std::to_string(p) + ", d(alpha) in {";
    for (auto it = exponents.begin(); it != exponents.end(); ++it)
      detail += (it == exponents.begin() ? "" : ",") + std::to_string(*it);
    detail += "}";
    report.checks.push_back(check("special isomorphism (c = p^d)", ok, detail));
  }

  if (!rn.source_lattice.empty() || !rn.target_lattice.empty()) {
    // Both memberships are congruences, so a box of side lcm(moduli) covers
    // every residue class.
    std::int64_t period = 1;
    for (const auto& l : rn.source_lattice) period = std::lcm(period, l.modulus);
    for (const auto& l : rn.target_lattice) period = std::lcm(period, l.modulus);
    bool ok = true;
    std::string detail;
    Weight probe(Rs.rank());
    for (;;) {
      if (rn.in_source_lattice(probe)) {
        const RationalWeight image = rn.phi.apply(probe);
        if (!image.is_integral() || !rn.in_target_lattice(image.to_weight())) {
          ok = false;
          detail = "(" + to_string(probe) + ") maps outside the target character lattice";
          break;
        }
      }
      std::size_t i = 0;
      while (i < probe.rank() && ++probe[i] == period) probe[i++] = 0;
      if (i == probe.rank()) break;
    }
    report.checks.push_back(check("character sublattice compatibility", ok, detail));
  }

  {
    const auto dual = dual_renormalization(rn);
    const auto dual_checks = core_checks(dual);
    std::string detail;
    bool ok = true;
    for (const auto& c : dual_checks) {
      if (!c.passed) {
        ok = false;
        detail = c.name + ": " + c.detail;
        break;
      }
    }
    if (ok) detail = "(phi^-1, c') from " + R.label() + "^vee to " + Rs.label() + "^vee";
    report.checks.push_back(check("dual renormalization", ok, detail));
  }
  return report;
}

namespace {

RationalMatrix scalar_matrix(std::size_t n, std::int64_t k) {
  return Rational(k) * RationalMatrix::identity(n);
}

int parse_rank(std::string_view text, std::string_view descriptor) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw InputError("bad parameter '" + std::string(text) + "' in '" + std::string(descriptor) + "'");
  return value;
}

}  // namespace

Renormalization trivial_renormalization(std::string_view type, std::int64_t scale) {
  if (scale < 1) throw InputError("trivial renormalization needs a positive scale");
  RootSystem R = build_root_system(type);
  const std::size_t n = R.rank();
  const std::size_t roots = R.num_positive_roots();
  auto rn = make_renormalization("trivial:" + std::string(type) +
                                     (scale == 1 ? "" : ":" + std::to_string(scale)),
                                 R, R, scalar_matrix(n, scale),
                                 std::vector<std::int64_t>(roots, scale));
  rn.description = "phi = id, c = " + std::to_string(scale) + " on every root";
  return rn;
}

Renormalization short_to_dual(std::string_view type) {
  if (type.empty()) throw InputError("short_to_dual needs a type");
  RootSystem R = build_root_system(type);
  const std::size_t n = R.rank();
  std::string dual_type(type);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  switch (type.front()) {
    case 'B':
      dual_type[0] = 'C';
      break;
    case 'C':
      dual_type[0] = 'B';
      break;
    case 'F':
    case 'G':
      std::reverse(perm.begin(), perm.end());
      break;
    default:
      throw InputError("short_to_dual needs two root lengths (types B, C, F4, G2), got '" +
                       std::string(type) + "'");
  }
  RootSystem Rs = build_root_system(dual_type);

  std::int64_t longest = 1;
  for (std::size_t i = 0; i < n; ++i) longest = std::max(longest, R.half_length(i));
  std::vector<std::int64_t> c(R.num_positive_roots());
  for (std::size_t a = 0; a < c.size(); ++a) c[a] = R.is_short(a) ? longest : 1;

  // phi(alpha'_i) = c(alpha_{perm(i)}) alpha_{perm(i)}, written in
  // fundamental-weight coordinates: phi = A S A'^{-1}.
  RationalMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s(perm[i], i) = c[perm[i]];
  RationalMatrix phi = RationalMatrix(R.cartan()) * s * RationalMatrix(Rs.cartan()).inverse();

  auto rn = make_renormalization("short_to_dual:" + std::string(type), std::move(Rs), std::move(R),
                                 std::move(phi), std::move(c));
  rn.prime = longest;
  rn.description = "phi = id on the ambient space, c = " + std::to_string(longest) +
                   " on short roots and 1 on long roots";
  return rn;
}

Renormalization so_to_sp(int rank) {
  if (rank < 2) throw InputError("so_to_sp needs rank >= 2");
  auto rn = short_to_dual("B" + std::to_string(rank));
  rn.name = "so_to_sp:" + std::to_string(rank);
  rn.description = "Sp(" + std::to_string(2 * rank) + ") -> SO(" + std::to_string(2 * rank + 1) +
                   "): identity in epsilon coordinates (char 2)";
  std::vector<std::int64_t> last(rank, 0);
  last.back() = 1;
  rn.target_lattice.push_back(
      LatticeConstraint{last, 2, "SO(2l+1) characters: integer epsilon coordinates"});
  return rn;
}

Renormalization sp_to_spin(int rank) {
  if (rank < 2) throw InputError("sp_to_spin needs rank >= 2");
  auto rn = short_to_dual("C" + std::to_string(rank));
  rn.name = "sp_to_spin:" + std::to_string(rank);
  rn.description = "Spin(" + std::to_string(2 * rank + 1) + ") -> Sp(" +
                   std::to_string(2 * rank) + "): mu -> 2mu in epsilon coordinates (char 2)";
  return rn;
}

Renormalization f4_renormalization() {
  auto rn = short_to_dual("F4");
  rn.name = "f4";
  rn.description = "F4 special isogeny (char 2): (a,b,c,d) -> (d,c,2b,2a)";
  return rn;
}

Renormalization g2_renormalization() {
  auto rn = short_to_dual("G2");
  rn.name = "g2";
  rn.description = "G2 special isogeny (char 3): (a,b) -> (3b,a)";
  return rn;
}

Renormalization frobenius(std::string_view type, std::int64_t p) {
  if (!is_prime(p)) throw InputError("frobenius needs a prime, got " + std::to_string(p));
  RootSystem R = build_root_system(type);
  const std::size_t n = R.rank();
  const std::size_t roots = R.num_positive_roots();
  auto rn = make_renormalization("frobenius:" + std::string(type) + ":" + std::to_string(p), R, R,
                                 scalar_matrix(n, p), std::vector<std::int64_t>(roots, p));
  rn.prime = p;
  rn.description = "lambda -> " + std::to_string(p) + " lambda";
  return rn;
}

Renormalization builtin(std::string_view descriptor) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    auto colon = descriptor.find(':', start);
    parts.push_back(descriptor.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  const auto& kind = parts.front();
  const auto arity = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() - 1 < lo || parts.size() - 1 > hi)
      throw InputError("wrong number of parameters in '" + std::string(descriptor) +
                       "' (see `renorm list`)");
  };
  if (kind == "trivial") {
    arity(1, 2);
    return trivial_renormalization(parts[1], parts.size() == 3 ? parse_rank(parts[2], descriptor) : 1);
  }
  if (kind == "short_to_dual") {
    arity(1, 1);
    return short_to_dual(parts[1]);
  }
  if (kind == "so_to_sp") {
    arity(1, 1);
    return so_to_sp(parse_rank(parts[1], descriptor));
  }
  if (kind == "sp_to_spin") {
    arity(1, 1);
    return sp_to_spin(parse_rank(parts[1], descriptor));
  }
  if (kind == "f4") {
    arity(0, 0);
    return f4_renormalization();
  }
  if (kind == "g2") {
    arity(0, 0);
    return g2_renormalization();
  }
  if (kind == "frobenius") {
    arity(2, 2);
    return frobenius(parts[1], parse_rank(parts[2], descriptor));
  }
  throw InputError("unknown renormalization '" + std::string(descriptor) + "' (see `renorm list`)");
}

std::vector<BuiltinInfo> builtin_catalog() {
  return {
      {"trivial:<type>[:k]", "phi = id with c = k on every root (R' = kR)"},
      {"short_to_dual:<type>", "phi = id, c = r on short roots; source is the dual type"},
      {"so_to_sp:<l>", "Sp(2l) -> SO(2l+1), identity on epsilon coordinates"},
      {"sp_to_spin:<l>", "Spin(2l+1) -> Sp(2l), doubling on epsilon coordinates"},
      {"f4", "F4: (a,b,c,d) -> (d,c,2b,2a)"},
      {"g2", "G2: (a,b) -> (3b,a)"},
      {"frobenius:<type>:<p>", "lambda -> p lambda"},
  };
}

Weight map_weight(const Renormalization& rn, const Weight& w) {
  if (w.rank() != rn.source.rank())
    throw InputError("weight (" + to_string(w) + ") has wrong rank for " + rn.source.label());
  if (!rn.in_source_lattice(w))
    throw InputError("weight (" + to_string(w) + ") is not in the source character lattice");
  const RationalWeight image = rn.phi.apply(w);
  if (!image.is_integral())
    throw InvariantViolation("phi(" + to_string(w) + ") = (" + to_string(image) +
                             ") is not integral");
  Weight out = image.to_weight();
  if (!rn.in_target_lattice(out))
    throw InvariantViolation("phi(" + to_string(w) + ") leaves the target character lattice");
  return out;
}

RationalWeight map_weight(const Renormalization& rn, const RationalWeight& w) {
  return rn.phi.apply(w);
}

LSChain transport_chain(const Renormalization& rn, const LSChain& chain, ChainChecker& target) {
  LSChain image;
  image.shape = map_weight(rn, chain.shape);
  for (const auto& s : chain.steps) image.steps.push_back(map_weight(rn, s));
  image.cuts = chain.cuts;
  std::string why;
  if (!target.valid(image, &why))
    throw InvariantViolation("transported chain is not an LS chain: " + why);
  return image;
}

LSChain transport_chain(const Renormalization& rn, const LSChain& chain) {
  const auto poset = weyl_orbit_poset(rn.target, map_weight(rn, chain.shape));
  ChainChecker checker(poset);
  return transport_chain(rn, chain, checker);
}

TransportReport check_transport(const Renormalization& rn, const PathModel& source,
                                const PathModel& target, const Weight& shape) {
  TransportReport report;
  report.source_shape = shape;
  report.target_shape = map_weight(rn, shape);
  const auto source_table = source.chains(shape);
  const auto target_table = target.chains(report.target_shape);
  report.source_chains = source_table->chains.size();
  report.target_chains = target_table->chains.size();

  const std::set<LSChain> enumerated(target_table->chains.begin(), target_table->chains.end());
  const auto poset = target.orbit(report.target_shape);
  ChainChecker checker(*poset);
  std::set<LSChain> images;
  for (std::size_t k = 0; k < source_table->chains.size(); ++k) {
    const auto& chain = source_table->chains[k];
    LSChain image;
    try {
      image = transport_chain(rn, chain, checker);
    } catch (const InvariantViolation&) {
      ++report.invalid_images;
      continue;
    }
    if (!enumerated.contains(image)) ++report.invalid_images;
    if (!images.insert(image).second) ++report.collisions;

    const auto source_delta = delta_sequence(chain);
    const auto image_delta = delta_sequence(image);
    for (std::size_t t = 0; t < source_delta.size(); ++t) {
      if (map_weight(rn, source_delta[t]) != image_delta[t]) {
        ++report.delta_mismatches;
        break;
      }
    }
    if (chain_depth(image) != map_weight(rn, source_table->depths[k])) ++report.depth_mismatches;
    if (chain_endpoint(image) != map_weight(rn, source_table->endpoints[k]))
      ++report.endpoint_mismatches;
  }
  return report;
}

}  // namespace lspath

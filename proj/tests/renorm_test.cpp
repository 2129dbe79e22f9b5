#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lspath/errors.hpp"
#include "lspath/path_model.hpp"
#include "lspath/renorm.hpp"
#include "lspath/root_system.hpp"

namespace lspath {
namespace {

const char* const kBuiltins[] = {"trivial:A1",       "trivial:A2",       "trivial:B2:2",
                                 "trivial:G2:3",     "short_to_dual:B2", "short_to_dual:B3",
                                 "short_to_dual:C3", "short_to_dual:F4", "short_to_dual:G2",
                                 "so_to_sp:2",       "so_to_sp:3",       "sp_to_spin:2",
                                 "sp_to_spin:3",     "f4",               "g2",
                                 "frobenius:A1:2",   "frobenius:A2:3",   "frobenius:B2:2",
                                 "frobenius:G2:5",   "frobenius:D4:2"};

const ValidationCheck* find_check(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

TEST(Renormalization, EveryBuiltinValidates) {
  for (const char* descriptor : kBuiltins) {
    const auto report = validate(builtin(descriptor));
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << descriptor << ": " << c.name << " " << c.detail;
    EXPECT_TRUE(report.ok()) << descriptor;
  }
}

TEST(Renormalization, DualOfEveryBuiltinValidates) {
  for (const char* descriptor : kBuiltins) {
    const auto rn = builtin(descriptor);
    const auto dual = dual_renormalization(rn);
    EXPECT_EQ(dual.source.cartan(), rn.target.dual().cartan()) << descriptor;
    EXPECT_EQ(dual.target.cartan(), rn.source.dual().cartan()) << descriptor;
    EXPECT_TRUE(validate(dual).ok()) << descriptor;
  }
}

TEST(Renormalization, IdentityIsValid) {
  const auto R = build_root_system("C3");
  const auto rn = make_renormalization("id", R, R, RationalMatrix::identity(3),
                                       std::vector<std::int64_t>(R.num_positive_roots(), 1));
  EXPECT_TRUE(validate(rn).ok());
}

TEST(Renormalization, ShortToDualSourceIsDualType) {
  const auto rn = builtin("short_to_dual:B2");
  EXPECT_TRUE(validate(rn).ok());
  const auto dual = build_root_system("B2").dual();
  EXPECT_EQ(rn.source.cartan(), dual.cartan());
  // Identity on epsilon coordinates, c = 2 exactly on the short roots.
  for (const auto& w : {Weight{1, 0}, Weight{0, 1}, Weight{3, 2}})
    EXPECT_EQ(to_epsilon(rn.target, map_weight(rn, w)), to_epsilon(rn.source, w));
  for (std::size_t a = 0; a < rn.target.num_positive_roots(); ++a)
    EXPECT_EQ(rn.c[a], rn.target.is_short(a) ? 2 : 1);
}

TEST(Renormalization, UniformScalingOfB2IsNotARootBijection) {
  const auto R = build_root_system("B2");
  const auto rn = make_renormalization("bad", R, R, RationalMatrix::identity(2),
                                       std::vector<std::int64_t>(R.num_positive_roots(), 2));
  const auto report = validate(rn);
  EXPECT_FALSE(report.ok());
  const auto* c = find_check(report, "root bijection");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
}

TEST(Renormalization, G2Table) {
  const auto rn = builtin("g2");
  EXPECT_EQ(map_weight(rn, Weight{1, 0}), (Weight{0, 1}));
  EXPECT_EQ(map_weight(rn, Weight{0, 1}), (Weight{3, 0}));
  EXPECT_EQ(rn.prime, 3);
}

TEST(Renormalization, F4Table) {
  const auto rn = builtin("f4");
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::int64_t a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
    EXPECT_EQ(map_weight(rn, Weight{a, b, c, d}), (Weight{d, c, 2 * b, 2 * a}));
  }
  EXPECT_EQ(rn.prime, 2);
}

TEST(Renormalization, SquaresToFrobenius) {
  for (const auto& [descriptor, p] : {std::pair{"f4", 2}, std::pair{"g2", 3}}) {
    const auto rn = builtin(descriptor);
    EXPECT_EQ(rn.phi * rn.phi, Rational(p) * RationalMatrix::identity(rn.phi.rows())) << descriptor;
  }
}

TEST(Renormalization, FrobeniusScales) {
  const auto rn = builtin("frobenius:A1:3");
  EXPECT_EQ(rn.phi, Rational(3) * RationalMatrix::identity(1));
  EXPECT_EQ(rn.c, std::vector<std::int64_t>{3});
  EXPECT_EQ(map_weight(rn, Weight{2}), Weight{6});
}

TEST(Renormalization, SpinToSpDoublesEpsilon) {
  const auto rn = builtin("sp_to_spin:2");
  EXPECT_EQ(rn.source.label(), "B2");
  EXPECT_EQ(rn.target.label(), "C2");
  const Weight spin = from_epsilon(rn.source, RationalWeight({Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(to_epsilon(rn.target, map_weight(rn, spin)), RationalWeight({Rational(1), Rational(1)}));
}

TEST(Renormalization, SoToSpIsIdentityOnEpsilon) {
  const auto rn = builtin("so_to_sp:3");
  EXPECT_EQ(rn.source.label(), "C3");
  EXPECT_EQ(rn.target.label(), "B3");
  for (const auto& w : {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}, Weight{2, 1, 3}})
    EXPECT_EQ(to_epsilon(rn.target, map_weight(rn, w)), to_epsilon(rn.source, w));
}

TEST(Renormalization, ZeroMapsToZero) {
  for (const char* descriptor : kBuiltins) {
    const auto rn = builtin(descriptor);
    EXPECT_TRUE(map_weight(rn, Weight(rn.source.rank())).is_zero()) << descriptor;
  }
}

TEST(Renormalization, DominantToDominant) {
  for (const char* descriptor : kBuiltins) {
    const auto rn = builtin(descriptor);
    for (std::size_t i = 0; i < rn.source.rank(); ++i) {
      Weight w(rn.source.rank());
      w[i] = 2;
      EXPECT_TRUE(map_weight(rn, w).is_dominant()) << descriptor;
    }
  }
}

TEST(Renormalization, BuiltinErrors) {
  for (const char* bad : {"nope", "so_to_sp:1", "sp_to_spin:0", "frobenius:A2:4", "frobenius:A2:1",
                          "trivial:Q2", "trivial:A2:0", "short_to_dual:A2x", "f4:extra"})
    EXPECT_THROW(builtin(bad), InputError) << bad;
}

TEST(Renormalization, MapWeightRejectsWrongRank) {
  EXPECT_THROW(map_weight(builtin("g2"), Weight{1, 0, 0}), InputError);
}

TEST(Renormalization, CatalogIsNonEmpty) {
  EXPECT_GE(builtin_catalog().size(), 7u);
}

TEST(Transport, SingleStep) {
  const auto rn = builtin("g2");
  const LSChain C{Weight{1, 0}, {Weight{-1, 1}}, {}};
  const auto T = transport_chain(rn, C);
  EXPECT_EQ(T.shape, (Weight{0, 1}));
  EXPECT_EQ(T.steps, std::vector<Weight>{map_weight(rn, Weight{-1, 1})});
  EXPECT_TRUE(T.cuts.empty());
}

TEST(Transport, FrobeniusOnA1HalfChain) {
  for (std::int64_t p : {2, 3, 5}) {
    const auto rn = frobenius("A1", p);
    const LSChain C{Weight{2}, {Weight{-2}, Weight{2}}, {Rational(1, 2)}};
    const auto T = transport_chain(rn, C);
    EXPECT_EQ(T.steps, (std::vector<Weight>{Weight{-2 * p}, Weight{2 * p}}));
    EXPECT_EQ(T.cuts, C.cuts);
    EXPECT_TRUE(is_valid_chain(weyl_orbit_poset(rn.target, T.shape), T));
  }
}

TEST(Transport, G2FundamentalIsInjective) {
  const auto rn = builtin("g2");
  const auto source = enumerate_ls_chains(rn.source, Weight{1, 0});
  std::set<LSChain> images;
  for (const auto& C : source) {
    const auto T = transport_chain(rn, C);
    EXPECT_EQ(chain_depth(T), map_weight(rn, chain_depth(C)));
    EXPECT_EQ(chain_endpoint(T), map_weight(rn, chain_endpoint(C)));
    images.insert(T);
  }
  EXPECT_EQ(images.size(), source.size());
}

TEST(Transport, ReportsAreCleanAtSweepScale) {
  for (const char* descriptor : {"g2", "frobenius:A2:2", "so_to_sp:2", "sp_to_spin:2", "short_to_dual:B3"}) {
    const auto rn = builtin(descriptor);
    PathModel source(rn.source), target(rn.target);
    for (std::size_t i = 0; i < rn.source.rank(); ++i) {
      Weight shape(rn.source.rank());
      shape[i] = 1;
      shape[0] += 1;
      const auto r = check_transport(rn, source, target, shape);
      EXPECT_TRUE(r.ok()) << descriptor << " " << to_string(shape);
      EXPECT_LE(r.source_chains, r.target_chains);
      EXPECT_EQ(r.target_shape, map_weight(rn, shape));
    }
  }
}

}  // namespace
}  // namespace lspath

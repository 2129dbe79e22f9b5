#include <gtest/gtest.h>

#include <random>

#include "lspath/errors.hpp"
#include "lspath/orbit.hpp"
#include "lspath/rational.hpp"
#include "lspath/root_system.hpp"
#include "test_support.hpp"

namespace lspath {
namespace {

using testing::all_simple;
using testing::naive_orbit;

const char* const kTypes[] = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4",
                              "D5", "E6", "E7", "E8", "F4", "G2"};

TEST(RootSystem, PositiveRootCounts) {
  const std::map<std::string, std::size_t> expected = {
      {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A4", 10}, {"B2", 4},  {"B3", 9},
      {"B4", 16}, {"C3", 9},  {"C4", 16}, {"D4", 12}, {"D5", 20}, {"E6", 36},
      {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const auto& [type, n] : expected)
    EXPECT_EQ(build_root_system(type).num_positive_roots(), n) << type;
}

TEST(RootSystem, WeylGroupOrderMatchesRegularOrbit) {
  const std::map<std::string, std::int64_t> classical = {
      {"A1", 2},     {"A2", 6},     {"A3", 24},    {"B2", 8},      {"B3", 48},
      {"C3", 48},    {"D4", 192},   {"F4", 1152},  {"G2", 12},     {"E6", 51840},
      {"E7", 2903040}, {"E8", 696729600}};
  for (const auto& [type, order] : classical) {
    const auto R = build_root_system(type);
    EXPECT_EQ(R.weyl_group_order(), order) << type;
    // Brute-force orbit of rho is only affordable for the small ranks.
    if (order <= 1152)
      EXPECT_EQ(static_cast<std::int64_t>(naive_orbit(R, R.rho(), all_simple(R)).size()), order)
          << type;
  }
}

TEST(RootSystem, CartanShape) {
  for (const char* type : kTypes) {
    const auto R = build_root_system(type);
    for (std::size_t i = 0; i < R.rank(); ++i)
      for (std::size_t j = 0; j < R.rank(); ++j) {
        if (i == j)
          EXPECT_EQ(R.cartan()[i][j], 2) << type;
        else
          EXPECT_LE(R.cartan()[i][j], 0) << type;
      }
  }
  EXPECT_EQ(build_root_system("A1").cartan(), IntMatrix({{2}}));
}

TEST(RootSystem, RootsAreNonnegativeCombinationsAndPairToTwo) {
  for (const char* type : kTypes) {
    const auto R = build_root_system(type);
    for (std::size_t a = 0; a < R.num_positive_roots(); ++a) {
      for (auto k : R.root_coefficients(a)) EXPECT_GE(k, 0) << type;
      EXPECT_EQ(R.pairing(R.root(a), a), 2) << type;
    }
  }
}

// B2 from its epsilon realization: alpha_1 = e1 - e2 (long), alpha_2 = e2.
TEST(RootSystem, B2FromEpsilonCoordinates) {
  const auto R = build_root_system("B2");
  EXPECT_EQ(R.num_positive_roots(), 4u);
  const std::vector<std::vector<int>> simple = {{1, -1}, {0, 1}};
  auto dot = [](const auto& x, const auto& y) { return x[0] * y[0] + x[1] * y[1]; };
  // <alpha_1, alpha_2^vee> = 2 (a1.a2)/(a2.a2) = -2 and <alpha_2, alpha_1^vee> = -1.
  const int a1_a2v = 2 * dot(simple[0], simple[1]) / dot(simple[1], simple[1]);
  const int a2_a1v = 2 * dot(simple[1], simple[0]) / dot(simple[0], simple[0]);
  EXPECT_EQ(a1_a2v, -2);
  EXPECT_EQ(a2_a1v, -1);
  // cartan()(i, j) holds <alpha_j, alpha_i^vee>.
  EXPECT_EQ(R.cartan()[1][0], a1_a2v);
  EXPECT_EQ(R.cartan()[0][1], a2_a1v);
  EXPECT_FALSE(R.is_short(0));
  EXPECT_TRUE(R.is_short(1));
}

TEST(RootSystem, G2HighestRoot) {
  const auto R = build_root_system("G2");
  EXPECT_EQ(R.num_positive_roots(), 6u);
  EXPECT_TRUE(R.is_short(0));
  EXPECT_EQ(R.root_coefficients(R.highest_root()), (std::vector<std::int64_t>{3, 2}));
  EXPECT_EQ(R.pairing(Weight{0, 1}, R.highest_root()), 2);
}

TEST(RootSystem, FundamentalWeightsAreDualToSimpleCoroots) {
  for (const char* type : kTypes) {
    const auto R = build_root_system(type);
    for (std::size_t i = 0; i < R.rank(); ++i) {
      Weight w(R.rank());
      w[i] = 1;
      for (std::size_t j = 0; j < R.rank(); ++j) EXPECT_EQ(R.pairing(w, j), i == j ? 1 : 0);
    }
  }
}

TEST(RootSystem, RhoPairsToCorootHeight) {
  for (const char* type : kTypes) {
    const auto R = build_root_system(type);
    for (std::size_t a = 0; a < R.num_positive_roots(); ++a) {
      std::int64_t h = 0;
      for (auto k : R.coroot_coefficients(a)) h += k;
      EXPECT_EQ(R.pairing(R.rho(), a), h) << type;
      EXPECT_GT(h, 0);
    }
  }
}

TEST(RootSystem, ReflectionIsInvolution) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (const char* type : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
    const auto R = build_root_system(type);
    for (int trial = 0; trial < 50; ++trial) {
      Weight nu(R.rank());
      for (std::size_t i = 0; i < R.rank(); ++i) nu[i] = coord(rng);
      for (std::size_t a = 0; a < R.num_positive_roots(); ++a) {
        const Weight s = R.reflect(nu, a);
        EXPECT_EQ(R.reflect(s, a), nu);
        EXPECT_EQ(s == nu, R.pairing(nu, a) == 0);
      }
    }
  }
  const auto A1 = build_root_system("A1");
  for (std::int64_t m = 0; m <= 5; ++m) EXPECT_EQ(A1.reflect(Weight{m}, 0), Weight{-m});
}

TEST(RootSystem, OrbitTimesStabilizerIsWeylOrder) {
  for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4"}) {
    const auto R = build_root_system(type);
    // Every dominant weight with coordinate sum at most 3.
    std::vector<Weight> todo{Weight(R.rank())};
    std::set<Weight> weights;
    while (!todo.empty()) {
      Weight w = todo.back();
      todo.pop_back();
      if (!weights.insert(w).second) continue;
      std::int64_t sum = 0;
      for (auto c : w.coords) sum += c;
      if (sum == 3) continue;
      for (std::size_t i = 0; i < R.rank(); ++i) {
        Weight v = w;
        ++v[i];
        todo.push_back(v);
      }
    }
    for (const auto& mu : weights) {
      std::vector<std::size_t> fixing;
      for (std::size_t i = 0; i < R.rank(); ++i)
        if (mu[i] == 0) fixing.push_back(i);
      // The parabolic subgroup acts simply transitively on the orbit of rho.
      const auto stabilizer = naive_orbit(R, R.rho(), fixing).size();
      const auto P = weyl_orbit_poset(R, mu);
      EXPECT_EQ(static_cast<std::int64_t>(P.size() * stabilizer), R.weyl_group_order())
          << type << " " << to_string(mu);
      EXPECT_EQ(P.size(), naive_orbit(R, mu, all_simple(R)).size());
    }
  }
}

TEST(RootSystem, DualWeight) {
  for (const char* type : {"B2", "F4", "G2"}) {
    const auto R = build_root_system(type);
    for (std::size_t i = 0; i < R.rank(); ++i) {
      Weight w(R.rank());
      w[i] = 2;
      w[R.rank() - 1 - i] += 1;
      EXPECT_EQ(dual_weight(R, w), w) << type;
    }
  }
  const auto A2 = build_root_system("A2");
  EXPECT_EQ(dual_weight(A2, Weight{1, 0}), (Weight{0, 1}));
  EXPECT_EQ(dual_weight(A2, Weight{0, 0}), (Weight{0, 0}));
  for (const char* type : {"A4", "D5", "E6"}) {
    const auto R = build_root_system(type);
    for (std::size_t i = 0; i < R.rank(); ++i) {
      Weight w(R.rank());
      w[i] = 1;
      const Weight d = dual_weight(R, w);
      EXPECT_TRUE(d.is_dominant());
      EXPECT_EQ(dual_weight(R, d), w);
      // -w is in the orbit of the dual.
      EXPECT_TRUE(naive_orbit(R, d, all_simple(R)).contains(-w));
    }
  }
}

TEST(RootSystem, EpsilonCoordinates) {
  const auto B2 = build_root_system("B2");
  const auto spin = from_epsilon(B2, RationalWeight({Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(spin, (Weight{0, 1}));
  EXPECT_EQ(to_epsilon(B2, Weight{1, 0}), RationalWeight({Rational(1), Rational(0)}));
  const auto C2 = build_root_system("C2");
  EXPECT_EQ(from_epsilon(C2, RationalWeight({Rational(1), Rational(1)})), (Weight{0, 1}));
  EXPECT_THROW(from_epsilon(C2, RationalWeight({Rational(1, 2), Rational(1, 2)})), InputError);
}

TEST(RootSystem, RejectsUnknownTypes) {
  for (const char* bad : {"", "Z2", "A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "A", "A2x"})
    EXPECT_THROW(build_root_system(bad), InputError) << bad;
}

}  // namespace
}  // namespace lspath

#include <gtest/gtest.h>

#include <functional>

#include "lspath/errors.hpp"
#include "lspath/orbit.hpp"
#include "lspath/root_system.hpp"

namespace lspath {
namespace {

TEST(OrbitPoset, Origin) {
  const auto P = weyl_orbit_poset(build_root_system("B3"), Weight{0, 0, 0});
  EXPECT_EQ(P.size(), 1u);
  EXPECT_TRUE(P.covers.empty());
}

TEST(OrbitPoset, A1Fundamental) {
  const auto P = weyl_orbit_poset(build_root_system("A1"), Weight{1});
  ASSERT_EQ(P.size(), 2u);
  EXPECT_EQ(P.elements[0], Weight{1});
  EXPECT_EQ(P.elements[1], Weight{-1});
  ASSERT_EQ(P.covers.size(), 1u);
  EXPECT_EQ(P.covers[0].pairing, 1);
  EXPECT_EQ(P.covers[0].upper, 0u);
}

TEST(OrbitPoset, B2FirstFundamentalIsAChain) {
  const auto P = weyl_orbit_poset(build_root_system("B2"), Weight{1, 0});
  EXPECT_EQ(P.size(), 4u);
  EXPECT_EQ(P.covers.size(), 3u);
  // A chain: each element except the top has exactly one cover above it.
  std::vector<int> up(P.size()), down(P.size());
  for (const auto& c : P.covers) {
    ++up[c.lower];
    ++down[c.upper];
  }
  for (std::size_t i = 0; i < P.size(); ++i) {
    EXPECT_LE(up[i], 1);
    EXPECT_LE(down[i], 1);
  }
}

TEST(OrbitPoset, CoversAreReflections) {
  for (const char* type : {"A3", "B3", "C3", "G2", "F4"}) {
    const auto R = build_root_system(type);
    Weight mu(R.rank());
    mu[0] = 1;
    mu[R.rank() - 1] += 1;
    const auto P = weyl_orbit_poset(R, mu);
    for (const auto& c : P.covers) {
      const Weight& x = P.elements[c.lower];
      const Weight& y = P.elements[c.upper];
      EXPECT_GT(c.pairing, 0);
      EXPECT_EQ(R.pairing(y, c.root), c.pairing);
      EXPECT_EQ(x, R.reflect(y, c.root));
      EXPECT_EQ(y - x, c.pairing * R.root(c.root));
    }
  }
}

// Every maximal chain from the bottom to the top has the same length, and
// the dominant weight is the unique maximum.
TEST(OrbitPoset, GradedWithUniqueMaximum) {
  for (const char* type : {"A3", "B2", "B3", "C3", "G2", "D4"}) {
    const auto R = build_root_system(type);
    for (std::size_t i = 0; i < R.rank(); ++i) {
      Weight mu(R.rank());
      mu[i] = 1;
      const auto P = weyl_orbit_poset(R, mu);
      std::vector<std::vector<std::size_t>> above(P.size());
      for (const auto& c : P.covers) above[c.lower].push_back(c.upper);
      for (std::size_t x = 1; x < P.size(); ++x) EXPECT_FALSE(above[x].empty()) << type;
      EXPECT_TRUE(above[0].empty());
      // Longest and shortest path lengths to the top coincide everywhere.
      std::vector<int> lo(P.size(), -1), hi(P.size(), -1);
      std::function<void(std::size_t)> visit = [&](std::size_t x) {
        if (lo[x] >= 0) return;
        if (above[x].empty()) {
          lo[x] = hi[x] = 0;
          return;
        }
        lo[x] = 1 << 30;
        hi[x] = 0;
        for (auto y : above[x]) {
          visit(y);
          lo[x] = std::min(lo[x], lo[y] + 1);
          hi[x] = std::max(hi[x], hi[y] + 1);
        }
      };
      for (std::size_t x = 0; x < P.size(); ++x) {
        visit(x);
        EXPECT_EQ(lo[x], hi[x]) << type << " " << to_string(P.elements[x]);
      }
    }
  }
}

TEST(OrbitPoset, RejectsNonDominant) {
  const auto R = build_root_system("A2");
  EXPECT_THROW(weyl_orbit_poset(R, Weight{1, -1}), InputError);
  EXPECT_THROW(weyl_orbit_poset(R, Weight{1}), InputError);
}

}  // namespace
}  // namespace lspath

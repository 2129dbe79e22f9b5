#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lspath/errors.hpp"
#include "lspath/invariants.hpp"
#include "lspath/renorm.hpp"
#include "test_support.hpp"

namespace lspath {
namespace {

std::int64_t inv(Workspace& ws, const char* type, std::vector<Weight> weights,
                 Method method = Method::path_model) {
  return ws.engine(type).invariant_dim(weights, method);
}

TEST(InvariantDim, BaseCases) {
  Workspace ws;
  EXPECT_EQ(inv(ws, "B2", {Weight{0, 0}}), 1);
  EXPECT_EQ(inv(ws, "B2", {Weight{1, 0}}), 0);
  EXPECT_EQ(inv(ws, "A2", {Weight{0, 0}, Weight{0, 0}, Weight{0, 0}}), 1);
  EXPECT_EQ(inv(ws, "A2", {Weight{1, 0}, Weight{0, 1}}), 1);
  EXPECT_EQ(inv(ws, "A2", {Weight{1, 0}, Weight{1, 0}}), 0);
}

TEST(InvariantDim, A1Examples) {
  Workspace ws;
  EXPECT_EQ(inv(ws, "A1", {Weight{1}, Weight{1}, Weight{2}}), 1);
  EXPECT_EQ(inv(ws, "A1", {Weight{1}, Weight{1}, Weight{1}}), 0);
  // Four spin-1/2 factors: two singlets.
  EXPECT_EQ(inv(ws, "A1", {Weight{1}, Weight{1}, Weight{1}, Weight{1}}), 2);
}

TEST(InvariantDim, MatchesPeelingOracle) {
  Workspace ws;
  for (const char* type : {"A2", "B2", "G2"}) {
    const auto& R = ws.engine(type).root_system();
    const auto tuples = all_tuples(dominant_box(2, 1), 3);
    for (const auto& t : tuples)
      EXPECT_EQ(ws.engine(type).invariant_dim(t), testing::peel_invariants(R, t)) << type;
  }
  const auto& A2 = ws.engine("A2").root_system();
  const std::vector<Weight> four = {Weight{1, 1}, Weight{1, 1}, Weight{1, 0}, Weight{0, 1}};
  EXPECT_EQ(ws.engine("A2").invariant_dim(four), testing::peel_invariants(A2, four));
}

TEST(InvariantDim, PermutationInvariant) {
  std::mt19937 rng(3);
  const auto pool = dominant_box(2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (const char* type : {"A2", "B2", "G2"}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Weight> t;
      const std::size_t n = 3 + trial % 2;
      for (std::size_t i = 0; i < n; ++i) t.push_back(pool[pick(rng)]);
      Workspace first;
      const auto value = inv(first, type, t);
      std::shuffle(t.begin(), t.end(), rng);
      Workspace fresh;
      EXPECT_EQ(inv(fresh, type, t), value) << type;
    }
  }
}

TEST(InvariantDim, PathModelEqualsOracle) {
  Workspace ws;
  for (const char* type : {"A2", "B2", "G2"})
    for (const auto& t : all_tuples(dominant_box(2, 2), 3))
      EXPECT_EQ(inv(ws, type, t), inv(ws, type, t, Method::oracle)) << type;
}

TEST(InvariantDim, RejectsBadInput) {
  Workspace ws;
  EXPECT_THROW(inv(ws, "A2", {Weight{1, -1}, Weight{0, 0}}), InputError);
  EXPECT_THROW(inv(ws, "A2", {Weight{1}, Weight{0, 0}}), InputError);
  EXPECT_THROW(inv(ws, "A2", {}), InputError);
}

TEST(Verify, TrivialIsEquality) {
  Workspace ws;
  const auto r = verify_inequality(ws, builtin("trivial:B2"), all_tuples(dominant_box(2, 2), 3));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.strict_count, 0u);
  for (const auto& row : r.rows) EXPECT_EQ(row.lhs, row.rhs);
}

TEST(Verify, SoToSpFundamentalPair) {
  Workspace ws;
  const auto r = verify_inequality(ws, so_to_sp(2), {{Weight{1, 0}, Weight{1, 0}, Weight{0, 0}}});
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].lhs, 1);
  EXPECT_EQ(r.rows[0].rhs, 1);
}

TEST(Verify, G2SweepHasNoViolationsAndSomeStrictness) {
  Workspace ws;
  const auto r = verify_inequality(ws, builtin("g2"), all_tuples(dominant_box(2, 2), 3));
  EXPECT_EQ(r.rows.size(), 729u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_GE(r.strict_count, 1u);
}

TEST(Verify, EveryBuiltinOnItsDefaultSweep) {
  Workspace ws;
  for (const char* descriptor : {"so_to_sp:2", "sp_to_spin:2", "g2", "f4", "short_to_dual:B2",
                           "short_to_dual:G2", "frobenius:A2:2", "trivial:A2:2"}) {
    const auto rn = builtin(descriptor);
    const auto r = verify_inequality(ws, rn, all_tuples(default_sweep_weights(rn, 1), 3));
    EXPECT_TRUE(r.ok()) << descriptor;
  }
}

// Integral weights: the SO side equals the same tuple computed directly on B.
TEST(Verify, SoSideEqualsSpinSideOnIntegralWeights) {
  Workspace ws;
  const auto rn = so_to_sp(2);
  const auto& B = ws.engine("B2");
  for (const auto& t : all_tuples(dominant_epsilon_box(rn.source, 2), 3)) {
    std::vector<Weight> direct;
    for (const auto& w : t) direct.push_back(from_epsilon(rn.target, to_epsilon(rn.source, w)));
    const auto r = verify_inequality(ws, rn, {t});
    EXPECT_EQ(r.rows[0].rhs, B.invariant_dim(direct, Method::oracle));
  }
}

TEST(Verify, DeterministicAcrossWorkerCounts) {
  const auto rn = builtin("sp_to_spin:2");
  const auto tuples = all_tuples(default_sweep_weights(rn, 2), 3);
  Workspace a, b;
  const auto one = verify_inequality(a, rn, tuples, {Method::path_model, 1});
  const auto many = verify_inequality(b, rn, tuples, {Method::path_model, 8});
  ASSERT_EQ(one.rows.size(), many.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    EXPECT_EQ(one.rows[i].tuple, many.rows[i].tuple);
    EXPECT_EQ(one.rows[i].lhs, many.rows[i].lhs);
    EXPECT_EQ(one.rows[i].rhs, many.rows[i].rhs);
  }
  EXPECT_EQ(one.strict_count, many.strict_count);
}

TEST(Verify, RejectsNonDominant) {
  Workspace ws;
  EXPECT_THROW(verify_inequality(ws, builtin("g2"), {{Weight{1, -1}, Weight{0, 0}}}), InputError);
}

TEST(Frobenius, Examples) {
  Workspace ws;
  const auto zero = frobenius_check(ws, "B2", {{Weight{0, 0}, Weight{0, 0}, Weight{0, 0}}}, 3);
  EXPECT_EQ(zero.rows[0].lhs, 1);
  EXPECT_EQ(zero.rows[0].rhs, 1);
  const auto a1 = frobenius_check(ws, "A1", {{Weight{1}, Weight{1}, Weight{1}}}, 2);
  EXPECT_EQ(a1.rows[0].lhs, 0);
  EXPECT_EQ(a1.rows[0].rhs, 1);
  EXPECT_EQ(a1.strict_count, 1u);
  const auto a2 = frobenius_check(ws, "A2", all_tuples(dominant_box(2, 2), 3), 2);
  EXPECT_TRUE(a2.ok());
}

TEST(Saturation, SmallScan) {
  Workspace ws;
  const auto r = saturation_scan(ws, 2, 3, 1);
  EXPECT_EQ(r.rows.size(), 64u);
  EXPECT_TRUE(r.ok());
  const auto& zero = r.rows.front();
  for (const auto& e : zero.epsilon) EXPECT_EQ(e, RationalWeight(2));
  EXPECT_TRUE(zero.integral);
  EXPECT_EQ(zero.spin, 1);
  EXPECT_EQ(zero.sp, 1);
  EXPECT_EQ(zero.witness_n, 1);
  // Every nonzero Spin-side value has a witness.
  for (const auto& row : r.rows)
    if (row.spin > 0) EXPECT_TRUE(row.witness_n.has_value());
}

TEST(Saturation, RejectsBadArguments) {
  Workspace ws;
  EXPECT_THROW(saturation_scan(ws, 1, 3, 1), InputError);
  EXPECT_THROW(saturation_scan(ws, 2, 0, 1), InputError);
  EXPECT_THROW(saturation_scan(ws, 2, 3, -1), InputError);
}

TEST(Sweeps, Boxes) {
  EXPECT_EQ(dominant_box(2, 2).size(), 9u);
  EXPECT_EQ(dominant_box(3, 0).size(), 1u);
  EXPECT_TRUE(dominant_box(2, -1).empty());
  EXPECT_EQ(all_tuples(dominant_box(2, 1), 3).size(), 64u);
  // Largest epsilon coordinate at most 1: 0, e1, e1+e2 and (e1+e2)/2.
  const auto B2 = build_root_system("B2");
  for (const auto& w : dominant_epsilon_box(B2, 1)) EXPECT_LE(to_epsilon(B2, w)[0], Rational(1));
  EXPECT_EQ(dominant_epsilon_box(B2, 1).size(), 4u);
  EXPECT_EQ(default_sweep_weights(builtin("f4"), 2).size(), 3u);
}

}  // namespace
}  // namespace lspath

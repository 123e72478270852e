#include <gtest/gtest.h>

#include "hermlie/io.hpp"
#include "hermlie/notation.hpp"
#include "hermlie/verifier.hpp"

using namespace hermlie;

namespace {

Instance fixture(const std::string& file) {
  const auto p = load_problem(std::string(HERMLIE_TEST_DATA) + "/" + file);
  return {file, p.algebra, p.structure};
}

SampleSpec small(int dim, Mode mode, int count = 6) {
  SampleSpec s;
  s.dim = dim;
  s.count = count;
  s.seed = 11;
  s.mode = mode;
  return s;
}

TEST(Verifier, SuitesPassInBothModes) {
  for (Mode mode : {Mode::exact, Mode::floating})
    for (int dim : {4, 6})
      for (const char* name : {"theorem1", "corollary33", "prop42", "consistency"}) {
        const auto rep = run_suite(name, small(dim, mode));
        EXPECT_TRUE(rep.ok()) << name << " dim " << dim << " " << to_string(mode) << ": "
                              << (rep.witness ? rep.witness->reason : "");
        EXPECT_GT(rep.samples, small(dim, mode).count) << name;
        EXPECT_FALSE(rep.witness.has_value());
        if (mode == Mode::exact) EXPECT_EQ(rep.max_residual, 0.0) << name;
        else EXPECT_LT(rep.max_residual, 1e-9) << name;
      }
}

TEST(Verifier, SameSeedSameVerdicts) {
  const auto a = theorem1_suite(small(6, Mode::exact));
  const auto b = theorem1_suite(small(6, Mode::exact));
  ASSERT_EQ(a.verdicts.size(), b.verdicts.size());
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    EXPECT_EQ(a.verdicts[i].seed, b.verdicts[i].seed);
    EXPECT_EQ(a.verdicts[i].kind, b.verdicts[i].kind);
  }
  auto other = small(6, Mode::exact);
  other.seed = 12;
  const auto c = theorem1_suite(other);
  bool differs = false;
  for (std::size_t i = 0; i < std::min(a.verdicts.size(), c.verdicts.size()); ++i)
    differs = differs || a.verdicts[i].seed != c.verdicts[i].seed;
  EXPECT_TRUE(differs);
}

TEST(Verifier, FixturePassesAndTamperedFixtureFails) {
  Checklist<Rational> good;
  const auto w = fixture("witness.json");
  theorem1_checks(w.algebra, w.structure, good);
  EXPECT_TRUE(good.ok()) << good.failures();

  // the tampered algebra is 3-step, so rho^1 need not vanish
  const auto t = fixture("tampered.json");
  EXPECT_FALSE(is_two_step(t.algebra));
  Checklist<Rational> bad;
  theorem1_checks(t.algebra, t.structure, bad);
  EXPECT_FALSE(bad.ok());
  EXPECT_GT(bad.residual(), 0.5);
  EXPECT_NE(bad.failures().find("not 2-step"), std::string::npos);
}

TEST(Verifier, FirstFailureIsKeptAsWitness) {
  SuiteReport rep;
  const detail::CheckFn<Rational> check = [](const auto& L, const auto& S, auto& ck, std::uint64_t) {
    theorem1_checks(L, S, ck);
  };
  detail::run_one<Rational>(rep, 0, 7, fixture("witness.json"), check);
  detail::run_one<Rational>(rep, 1, 8, fixture("tampered.json"), check);
  detail::run_one<Rational>(rep, 2, 9, fixture("tampered.json"), check);
  EXPECT_EQ(rep.samples, 3);
  EXPECT_EQ(rep.passed, 1);
  EXPECT_FALSE(rep.ok());
  ASSERT_TRUE(rep.witness.has_value());
  EXPECT_EQ(rep.witness->index, 1);
  EXPECT_EQ(rep.witness->seed, 8u);
  EXPECT_EQ(serialize_notation(rep.witness->algebra), "(0,0,-212,12+13)");

  // the witness document reloads to the same problem
  const auto doc = witness_json(*rep.witness);
  const auto back = problem_from_json(doc["problem"]);
  EXPECT_EQ(back.structure.g(), rep.witness->structure.g());
  EXPECT_EQ(suite_json(rep)["passed"], 1);
}

TEST(Verifier, ExceptionsBecomeFailures) {
  SuiteReport rep;
  const detail::CheckFn<Rational> check = [](const auto& L, const auto& S, auto&, std::uint64_t) {
    two_step_ricci(L, S, Rational(0));
  };
  detail::run_one<Rational>(rep, 0, 1, fixture("tampered.json"), check);
  ASSERT_EQ(rep.verdicts.size(), 1u);
  EXPECT_FALSE(rep.verdicts[0].pass);
  EXPECT_NE(rep.verdicts[0].detail.find("exception"), std::string::npos);
}

TEST(Verifier, BackendsAgree) {
  const auto cmp = compare_backends(small(6, Mode::exact, 20));
  EXPECT_EQ(cmp.samples, 20);
  EXPECT_LT(cmp.max_deviation, 1e-9);
}

TEST(Verifier, SuiteNames) {
  for (const char* name : {"theorem1", "corollary33", "prop42", "consistency", "all"}) EXPECT_TRUE(is_suite_name(name));
  EXPECT_FALSE(is_suite_name("theorem2"));
}

}  // namespace

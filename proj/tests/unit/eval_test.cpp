#include <gtest/gtest.h>

#include "revdetect/detail/random.hpp"
#include "revdetect/eval.hpp"
#include "support/oracles.hpp"

namespace revdetect {
namespace {

TEST(Evaluate, HandCase) {
  const std::vector<int> t{0, 0, 1, 1};
  const std::vector<int> p{0, 1, 1, 1};
  const auto r = evaluate(t, p);
  EXPECT_NEAR(r.macro_f1, 0.7333333333333333, 1e-12);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.75);
  EXPECT_DOUBLE_EQ(r.per_class[0].precision, 1.0);
  EXPECT_DOUBLE_EQ(r.per_class[0].recall, 0.5);
  EXPECT_DOUBLE_EQ(r.per_class[1].precision, 2.0 / 3.0);
  EXPECT_EQ(r.confusion.cells[0][1], 1u);
  EXPECT_EQ(r.per_class[1].support, 2u);
}

TEST(Evaluate, ZeroDivisionCountsAsZero) {
  const std::vector<int> t{1, 1, 1};
  const std::vector<int> p{1, 1, 1};
  const auto r = evaluate(t, p);
  EXPECT_EQ(r.per_class[0].precision, 0.0);
  EXPECT_EQ(r.per_class[0].f1, 0.0);
  EXPECT_EQ(r.per_class[1].f1, 1.0);
  EXPECT_DOUBLE_EQ(r.macro_f1, 0.5);
}

TEST(Evaluate, MatchesCountingOracle) {
  detail::Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.index(40);
    std::vector<int> t(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<int>(rng.index(2));
      p[i] = static_cast<int>(rng.index(2));
    }
    const auto r = evaluate(t, p);
    const auto o = testing::metric_oracle(t, p);
    for (int c = 0; c < 2; ++c) {
      EXPECT_NEAR(r.per_class[c].precision, o.precision[c], 1e-12);
      EXPECT_NEAR(r.per_class[c].recall, o.recall[c], 1e-12);
      EXPECT_NEAR(r.per_class[c].f1, o.f1[c], 1e-12);
    }
    EXPECT_NEAR(r.macro_f1, o.macro_f1, 1e-12);
    EXPECT_NEAR(r.accuracy, o.accuracy, 1e-12);
    EXPECT_EQ(r.samples(), n);
  }
}

TEST(Evaluate, SymmetricUnderClassSwap) {
  detail::Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.index(30);
    std::vector<int> t(n), p(n), ts(n), ps(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<int>(rng.index(2));
      p[i] = static_cast<int>(rng.index(2));
      ts[i] = 1 - t[i];
      ps[i] = 1 - p[i];
    }
    EXPECT_NEAR(evaluate(t, p).macro_f1, evaluate(ts, ps).macro_f1, 1e-12);
    EXPECT_NEAR(evaluate(t, p).accuracy, evaluate(p, t).accuracy, 1e-12);
  }
}

TEST(Evaluate, RejectsBadInput) {
  EXPECT_THROW(evaluate(std::vector<int>{}, std::vector<int>{}), DataError);
  EXPECT_THROW(evaluate(std::vector<int>{0}, std::vector<int>{0, 1}), DataError);
  EXPECT_THROW(evaluate(std::vector<int>{2}, std::vector<int>{0}), DataError);
}

TEST(Report, KvRoundTripIsExact) {
  detail::Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.index(50);
    std::vector<int> t(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<int>(rng.index(2));
      p[i] = static_cast<int>(rng.index(2));
    }
    const auto r = evaluate(t, p);
    EXPECT_EQ(report_from_kv(report_to_kv(r)), r);
  }
}

TEST(Report, RenderedTableHasTwoDecimals) {
  const auto r = evaluate(std::vector<int>{0, 0, 1, 1}, std::vector<int>{0, 1, 1, 1});
  const auto text = render_report(r);
  EXPECT_NE(text.find("macro avg"), std::string::npos);
  EXPECT_NE(text.find("0.73"), std::string::npos);
  EXPECT_NE(text.find("HUMAN"), std::string::npos);
}

TEST(Report, KvRejectsForeignFormat) {
  EXPECT_THROW(report_from_kv("format=other\n"), DataError);
  EXPECT_THROW(report_from_kv("format=revdetect-report/1\n"), DataError);
  EXPECT_THROW(report_from_kv("garbage"), DataError);
}

}  // namespace
}  // namespace revdetect

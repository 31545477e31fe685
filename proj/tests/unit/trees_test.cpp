#include <gtest/gtest.h>

#include <cmath>

#include "revdetect/boosting.hpp"
#include "revdetect/detail/random.hpp"
#include "revdetect/ensemble.hpp"
#include "revdetect/forest.hpp"

namespace revdetect {
namespace {

struct Data {
  Matrix x;
  LabelVector y;
};

// label = x0 + x1 > 1 with some label noise
Data random_data(std::uint64_t seed, std::size_t n, std::size_t d, double noise) {
  detail::Rng rng(seed);
  Data out{Matrix(n, d), LabelVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) out.x(i, k) = rng.uniform();
    int label = out.x(i, 0) + out.x(i, std::min<std::size_t>(1, d - 1)) > 1.0 ? 1 : 0;
    if (rng.uniform() < noise) label = 1 - label;
    out.y[i] = label;
  }
  out.y[0] = 0;
  out.y[1] = 1;
  return out;
}

double accuracy(const LabelVector& a, const LabelVector& b) {
  std::size_t ok = 0;
  for (std::size_t i = 0; i < a.size(); ++i) ok += a[i] == b[i];
  return static_cast<double>(ok) / static_cast<double>(a.size());
}

TEST(SplitThreshold, StaysBelowUpper) {
  EXPECT_DOUBLE_EQ(detail::split_threshold(1.0, 2.0), 1.5);
  const double lo = 1.0;
  const double hi = std::nextafter(lo, 2.0);
  EXPECT_EQ(detail::split_threshold(lo, hi), lo);
}

TEST(Forest, FitsTrainingData) {
  const auto d = random_data(1, 200, 4, 0.0);
  ForestOptions o;
  o.n_trees = 30;
  const auto m = train_random_forest(d.x, d.y, o);
  EXPECT_EQ(m.trees.size(), 30u);
  EXPECT_GT(accuracy(predict_labels(m, d.x), d.y), 0.97);
  const auto test = random_data(2, 200, 4, 0.0);
  EXPECT_GT(accuracy(predict_labels(m, test.x), test.y), 0.85);
}

TEST(Forest, ProbaIsVoteFraction) {
  const auto d = random_data(3, 80, 3, 0.1);
  ForestOptions o;
  o.n_trees = 7;
  const auto m = train_random_forest(d.x, d.y, o);
  for (std::size_t i = 0; i < d.x.rows(); ++i) {
    const auto p = m.proba(d.x.row(i));
    int votes = 0;
    for (const auto& t : m.trees) votes += ForestModel::tree_vote(t, d.x.row(i));
    EXPECT_DOUBLE_EQ(p[1], votes / 7.0);
    EXPECT_DOUBLE_EQ(p[0] + p[1], 1.0);
  }
}

TEST(Forest, IndependentOfThreadCount) {
  const auto d = random_data(4, 120, 5, 0.1);
  ForestOptions one;
  one.n_trees = 12;
  one.threads = 1;
  ForestOptions many = one;
  many.threads = 4;
  const auto a = train_random_forest(d.x, d.y, one);
  const auto b = train_random_forest(d.x, d.y, many);
  EXPECT_EQ(a.trees, b.trees);
}

TEST(Forest, LeavesArePureWhenSeparable) {
  const auto d = random_data(5, 60, 2, 0.0);
  ForestOptions o;
  o.n_trees = 3;
  const auto m = train_random_forest(d.x, d.y, o);
  for (const auto& t : m.trees)
    for (const auto& n : t.nodes)
      if (n.is_leaf()) {
        EXPECT_TRUE(n.class_counts[0] == 0 || n.class_counts[1] == 0);
      }
}

TEST(Boosting, LossNeverIncreases) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = random_data(seed, 150, 4, 0.2);
    const auto m = train_gradient_boosting(d.x, d.y, {});
    ASSERT_EQ(m.train_loss.size(), 101u);
    for (std::size_t r = 1; r < m.train_loss.size(); ++r)
      EXPECT_LE(m.train_loss[r], m.train_loss[r - 1] + 1e-9) << "round " << r;
    EXPECT_LT(m.train_loss.back(), m.train_loss.front());
  }
}

TEST(Boosting, RoundZeroIsPrior) {
  const auto d = random_data(6, 97, 3, 0.3);
  const auto m = train_gradient_boosting(d.x, d.y, {});
  const double n1 = static_cast<double>(std::count(d.y.begin(), d.y.end(), 1));
  EXPECT_EQ(m.proba(d.x.row(0), 0)[1], n1 / 97.0);
}

TEST(Boosting, RawScoreMatchesTraining) {
  // proba recomputed from the trees must give back the recorded final loss
  const auto d = random_data(7, 100, 3, 0.2);
  const auto m = train_gradient_boosting(d.x, d.y, {});
  double loss = 0;
  for (std::size_t i = 0; i < d.x.rows(); ++i) loss += logistic_loss(m.raw_score(d.x.row(i)), d.y[i]);
  EXPECT_EQ(loss / 100.0, m.train_loss.back());
}

TEST(Boosting, DepthIsBounded) {
  const auto d = random_data(8, 200, 4, 0.3);
  BoostingOptions o;
  o.max_depth = 3;
  o.n_rounds = 10;
  const auto m = train_gradient_boosting(d.x, d.y, o);
  for (const auto& t : m.trees) EXPECT_LE(t.depth(), 3u);
}

TEST(Boosting, SigmoidAndLossAreStable) {
  EXPECT_EQ(sigmoid(0.0), 0.5);
  EXPECT_GT(sigmoid(-800.0), -1.0);
  EXPECT_TRUE(std::isfinite(logistic_loss(800.0, 0)));
  EXPECT_NEAR(logistic_loss(0.0, 1), std::log(2.0), 1e-15);
}

TEST(Boosting, RejectsSingleClass) {
  EXPECT_THROW(train_gradient_boosting(Matrix(3, 1, 0.0), LabelVector{0, 0, 0}), DataError);
}

}  // namespace
}  // namespace revdetect

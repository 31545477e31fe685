#include <gtest/gtest.h>

#include <set>

#include "revdetect/cross_validation.hpp"
#include "revdetect/detail/random.hpp"
#include "revdetect/ensemble.hpp"

namespace revdetect {
namespace {

struct Data {
  Matrix x;
  LabelVector y;
};

Data blobs(std::uint64_t seed, std::size_t n) {
  detail::Rng rng(seed);
  Data d{Matrix(n, 3), LabelVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    d.y[i] = static_cast<int>(i % 2);
    for (std::size_t k = 0; k < 3; ++k)
      d.x(i, k) = rng.uniform() * 2 - 1 + (d.y[i] ? 0.8 : -0.8);
  }
  return d;
}

TEST(SoftVote, AveragesMemberProbabilities) {
  const auto d = blobs(1, 60);
  ForestOptions fo;
  fo.n_trees = 9;
  BoostingOptions bo;
  bo.n_rounds = 20;
  std::vector<MemberModel> members;
  members.emplace_back(train_random_forest(d.x, d.y, fo));
  members.emplace_back(train_gradient_boosting(d.x, d.y, bo));
  const auto vote = soft_vote(members, d.x);
  const auto pf = predict_proba(members[0], d.x);
  const auto pg = predict_proba(members[1], d.x);
  for (std::size_t i = 0; i < d.x.rows(); ++i) {
    EXPECT_DOUBLE_EQ(vote.proba[i][1], (pf[i][1] + pg[i][1]) / 2.0);
    EXPECT_EQ(vote.labels[i], vote.proba[i][1] > vote.proba[i][0] ? 1 : 0);
  }
}

TEST(SoftVote, NeedsTwoCompatibleMembers) {
  const auto d = blobs(2, 40);
  ForestOptions fo;
  fo.n_trees = 3;
  std::vector<MemberModel> one{train_random_forest(d.x, d.y, fo)};
  EXPECT_THROW(soft_vote(one, d.x), UsageError);
  Matrix narrow(40, 2);
  std::vector<MemberModel> mixed{train_random_forest(d.x, d.y, fo),
                                 train_random_forest(narrow, d.y, fo)};
  EXPECT_THROW(soft_vote(mixed, d.x), DataError);
}

TEST(Argmax, TiesGoToClassZero) {
  EXPECT_EQ(argmax({0.5, 0.5}), 0);
  EXPECT_EQ(argmax({0.4, 0.6}), 1);
}

TEST(StratifiedFolds, PartitionAndBalance) {
  LabelVector y;
  for (int i = 0; i < 53; ++i) y.push_back(i < 23 ? 0 : 1);
  const auto folds = stratified_folds(y, 5, 42);
  ASSERT_EQ(folds.size(), 5u);
  std::multiset<std::size_t> all;
  for (const auto& f : folds) {
    all.insert(f.validation.begin(), f.validation.end());
    EXPECT_EQ(f.train.size() + f.validation.size(), y.size());
    const auto zeros = std::count_if(f.validation.begin(), f.validation.end(),
                                     [&](std::size_t i) { return y[i] == 0; });
    EXPECT_GE(zeros, 4);
    EXPECT_LE(zeros, 5);
  }
  EXPECT_EQ(all.size(), y.size());
  EXPECT_EQ(std::set<std::size_t>(all.begin(), all.end()).size(), y.size());
}

TEST(StratifiedFolds, RejectsTooManyFolds) {
  EXPECT_THROW(stratified_folds(LabelVector{0, 1, 1, 1}, 2, 1), DataError);
  EXPECT_THROW(stratified_folds(LabelVector{0, 0, 1, 1}, 1, 1), UsageError);
}

TEST(CrossValidate, WorksWithAnyTrainer) {
  const auto d = blobs(3, 80);
  const auto scores = cross_validate(
      [](const Matrix& x, const LabelVector& y) {
        ForestOptions o;
        o.n_trees = 5;
        return train_random_forest(x, y, o);
      },
      d.x, d.y, 4, 42);
  ASSERT_EQ(scores.size(), 4u);
  for (double s : scores) EXPECT_GT(s, 0.7);
}

TEST(GridSearch, MatchesPlainCrossValidation) {
  const auto d = blobs(4, 60);
  SvmGrid grid;
  grid.kernels = {Kernel::linear, Kernel::rbf};
  grid.C = {0.1, 10.0};
  GridSearchOptions o;
  o.folds = 3;
  o.threads = 2;
  const auto res = svm_grid_search(d.x, d.y, grid, o);
  ASSERT_EQ(res.cv.points.size(), 8u);
  EXPECT_EQ(res.cv.points[0].params.kernel, Kernel::linear);
  EXPECT_EQ(res.cv.points[7].params.kernel, Kernel::rbf);
  for (const auto& p : res.cv.points) {
    const auto direct = cross_validate(
        [&](const Matrix& x, const LabelVector& y) { return train_svm(x, y, p.params); }, d.x,
        d.y, 3, 42);
    ASSERT_EQ(direct.size(), p.fold_scores.size());
    for (std::size_t k = 0; k < direct.size(); ++k)
      EXPECT_NEAR(direct[k], p.fold_scores[k], 1e-12) << p.params.describe();
  }
  // best is the first point with the top mean
  const auto& best = res.cv.best();
  for (std::size_t i = 0; i < res.cv.points.size(); ++i) {
    EXPECT_LE(res.cv.points[i].mean_score, best.mean_score);
    if (i < res.cv.best_index) {
      EXPECT_LT(res.cv.points[i].mean_score, best.mean_score);
    }
  }
  EXPECT_EQ(res.model.params.kernel, best.params.kernel);
  EXPECT_EQ(res.model.params.C, best.params.C);
}

TEST(GridSearch, DefaultGridHas32Points) {
  EXPECT_EQ(SvmGrid{}.expand().size(), 32u);
}

}  // namespace
}  // namespace revdetect

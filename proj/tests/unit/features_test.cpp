#include <gtest/gtest.h>

#include <cmath>

#include "revdetect/detail/random.hpp"
#include "revdetect/features.hpp"
#include "support/synthetic.hpp"

namespace revdetect {
namespace {

void expect_standardized(const Matrix& z, const Scaler& s, double tol) {
  for (std::size_t c = 0; c < z.cols(); ++c) {
    double mean = 0;
    for (std::size_t r = 0; r < z.rows(); ++r) mean += z(r, c);
    mean /= static_cast<double>(z.rows());
    double var = 0;
    for (std::size_t r = 0; r < z.rows(); ++r) var += (z(r, c) - mean) * (z(r, c) - mean);
    var /= static_cast<double>(z.rows());
    EXPECT_LE(std::abs(mean), tol);
    if (s.is_constant(c)) {
      EXPECT_EQ(var, 0.0);
    } else {
      EXPECT_NEAR(std::sqrt(var), 1.0, tol);
    }
  }
}

TEST(Scaler, StandardizesRandomMatrices) {
  detail::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix x(2 + rng.index(20), 1 + rng.index(6));
    for (double& v : x.values()) v = rng.uniform() * 100 - 50;
    for (std::size_t r = 0; r < x.rows(); ++r) x(r, 0) = 3.5;  // constant column
    const auto s = fit_scaler(x);
    EXPECT_TRUE(s.is_constant(0));
    EXPECT_EQ(s.mean()[0], 3.5);
    expect_standardized(s.apply(x), s, 1e-9);
  }
}

TEST(Scaler, SampleModeUsesNMinusOne) {
  Matrix x(2, 1);
  x(0, 0) = 0;
  x(1, 0) = 2;
  EXPECT_DOUBLE_EQ(fit_scaler(x, StdMode::population).stddev()[0], 1.0);
  EXPECT_DOUBLE_EQ(fit_scaler(x, StdMode::sample).stddev()[0], std::sqrt(2.0));
}

TEST(Scaler, RejectsWrongWidthAndEmpty) {
  Matrix x(3, 2, 1.0);
  const auto s = fit_scaler(x);
  EXPECT_THROW(s.apply(Matrix(1, 3)), DataError);
  EXPECT_THROW(fit_scaler(Matrix(0, 2)), DataError);
}

TEST(Fuse, TfidfBlockThenEmbedding) {
  SparseVector v{3, {{1, 0.5}}};
  const std::vector<double> e{7, 8};
  const auto row = fuse_features(v, e, {3, 2});
  EXPECT_EQ(row, (std::vector<double>{0, 0.5, 0, 7, 8}));
  EXPECT_THROW(fuse_features(v, e, {4, 2}), DataError);
}

TEST(FitFeatures, TrainMatrixIsStandardized) {
  const auto corpus = testing::synthetic_corpus({.per_class = 30});
  const auto docs = preprocess_corpus(corpus);
  FeatureOptions o;
  o.word2vec.dim = 20;
  o.word2vec.epochs = 3;
  const auto f = fit_features(docs, o);
  EXPECT_EQ(f.train_matrix.rows(), corpus.size());
  EXPECT_EQ(f.train_matrix.cols(), f.extractor.layout().total());
  EXPECT_EQ(f.extractor.layout().embedding_dim, 20u);
  expect_standardized(f.train_matrix, f.extractor.scaler, 1e-9);
  EXPECT_EQ(f.extractor.transform(corpus), f.train_matrix);
}

}  // namespace
}  // namespace revdetect

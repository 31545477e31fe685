#include <gtest/gtest.h>

#include <cmath>

#include "revdetect/detail/random.hpp"
#include "revdetect/ensemble.hpp"
#include "revdetect/svm.hpp"

namespace revdetect {
namespace {

struct Data {
  Matrix x;
  LabelVector y;
};

Data separable(std::uint64_t seed, std::size_t n, std::size_t d) {
  detail::Rng rng(seed);
  Data out{Matrix(n, d), LabelVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.y[i] = static_cast<int>(i % 2);
    for (std::size_t k = 0; k < d; ++k) out.x(i, k) = rng.uniform() * 2 - 1;
    out.x(i, 0) = (out.y[i] ? 1.0 : -1.0) * (0.5 + rng.uniform());
  }
  return out;
}

Data xor_data() {
  Data out{Matrix(4, 2), {0, 1, 1, 0}};
  const double pts[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 2; ++k) out.x(i, k) = pts[i][k];
  return out;
}

double train_accuracy(const SvmModel& m, const Data& d) {
  const auto pred = predict_labels(m, d.x);
  std::size_t ok = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) ok += pred[i] == d.y[i];
  return static_cast<double>(ok) / static_cast<double>(pred.size());
}

void expect_feasible(const SvmModel& m) {
  double sum = 0;
  for (std::size_t s = 0; s < m.alpha.size(); ++s) {
    EXPECT_GE(m.alpha[s], 0.0);
    EXPECT_LE(m.alpha[s], m.params.C);
    sum += m.alpha[s] * m.sv_sign[s];
  }
  EXPECT_LE(std::abs(sum), 1e-6);
}

TEST(Kernels, Values) {
  const KernelFunction lin{Kernel::linear, 0.5, 3, 0.0};
  EXPECT_DOUBLE_EQ(lin(2.0, 1.0, 9.0), 2.0);
  const KernelFunction rbf{Kernel::rbf, 0.5, 3, 0.0};
  // |x - z|^2 = xx + zz - 2xz = 1 + 9 - 4 = 6
  EXPECT_DOUBLE_EQ(rbf(2.0, 1.0, 9.0), std::exp(-3.0));
  const KernelFunction poly{Kernel::poly, 0.5, 3, 1.0};
  EXPECT_DOUBLE_EQ(poly(2.0, 1.0, 9.0), 8.0);
  const KernelFunction sig{Kernel::sigmoid, 0.5, 3, 0.0};
  EXPECT_DOUBLE_EQ(sig(2.0, 1.0, 9.0), std::tanh(1.0));
}

TEST(Gamma, ScaleAndAuto) {
  EXPECT_DOUBLE_EQ(resolve_gamma(GammaSpec::scale(), 4, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(resolve_gamma(GammaSpec::scale(), 4, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(resolve_gamma(GammaSpec::automatic(), 4, 0.5), 0.25);
  EXPECT_DOUBLE_EQ(resolve_gamma(*parse_gamma("0.3"), 4, 0.5), 0.3);
  EXPECT_FALSE(parse_gamma("-1"));
  EXPECT_FALSE(parse_gamma("fast"));
}

TEST(Svm, LinearSeparableIsFit) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto d = separable(seed, 60, 3);
    SvmParams p;
    p.kernel = Kernel::linear;
    p.C = 100.0;
    const auto m = train_svm(d.x, d.y, p);
    EXPECT_TRUE(m.converged);
    EXPECT_EQ(train_accuracy(m, d), 1.0);
    expect_feasible(m);
  }
}

TEST(Svm, XorWithRbf) {
  const auto d = xor_data();
  SvmParams p;
  p.kernel = Kernel::rbf;
  p.C = 10.0;
  const auto m = train_svm(d.x, d.y, p);
  EXPECT_EQ(train_accuracy(m, d), 1.0);
  expect_feasible(m);
}

TEST(Svm, FeasibleForEveryKernel) {
  detail::Rng rng(17);
  for (auto k : {Kernel::linear, Kernel::rbf, Kernel::poly, Kernel::sigmoid}) {
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = 10 + rng.index(30);
      Data d{Matrix(n, 4), LabelVector(n)};
      for (double& v : d.x.values()) v = rng.uniform() * 2 - 1;
      for (std::size_t i = 0; i < n; ++i) d.y[i] = static_cast<int>(i % 2);
      SvmParams p;
      p.kernel = k;
      p.C = 0.1 + rng.uniform() * 10;
      const auto m = train_svm(d.x, d.y, p);
      expect_feasible(m);
    }
  }
}

TEST(Svm, ProbabilitiesFollowDecision) {
  const auto d = separable(3, 80, 2);
  SvmParams p;
  p.kernel = Kernel::linear;
  const auto m = train_svm(d.x, d.y, p);
  for (std::size_t i = 0; i < d.x.rows(); ++i) {
    const auto pr = m.proba(d.x.row(i));
    EXPECT_NEAR(pr[0] + pr[1], 1.0, 1e-12);
    EXPECT_GE(pr[1], 0.0);
    EXPECT_LE(pr[1], 1.0);
  }
  // Platt slope is negative: larger decision, larger P(class 1)
  EXPECT_LT(m.platt.a, 0.0);
}

TEST(Svm, RejectsSingleClassAndNonFinite) {
  Matrix x(3, 1, 1.0);
  EXPECT_THROW(train_svm(x, LabelVector{1, 1, 1}, {}), DataError);
  x(0, 0) = std::nan("");
  EXPECT_THROW(train_svm(x, LabelVector{0, 1, 1}, {}), DataError);
  SvmParams bad;
  bad.C = 0;
  EXPECT_THROW(train_svm(Matrix(2, 1), LabelVector{0, 1}, bad), UsageError);
}

TEST(Svm, DeterministicAcrossRuns) {
  const auto d = separable(8, 50, 5);
  const auto a = train_svm(d.x, d.y, {});
  const auto b = train_svm(d.x, d.y, {});
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.rho, b.rho);
}

}  // namespace
}  // namespace revdetect

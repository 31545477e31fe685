#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "revdetect/detail/parallel.hpp"
#include "revdetect/detail/random.hpp"
#include "revdetect/ensemble.hpp"
#include "revdetect/eval.hpp"
#include "revdetect/svm.hpp"

namespace revdetect {

enum class CvMetric { macro_f1, accuracy };

inline double score_labels(CvMetric metric, std::span<const int> y_true,
                           std::span<const int> y_pred) {
  const auto r = evaluate(y_true, y_pred);
  return metric == CvMetric::macro_f1 ? r.macro_f1 : r.accuracy;
}

struct Fold {
  std::vector<std::size_t> train;
  std::vector<std::size_t> validation;
};

// Stratified k-fold: each class is shuffled with the seed, the classes are
// laid end to end, and position p goes to fold p mod k. Fold sizes differ
// by at most one and every fold sees both classes.
inline std::vector<Fold> stratified_folds(std::span<const int> y, std::size_t k,
                                          std::uint64_t seed) {
  if (k < 2) throw UsageError("cross-validation needs at least 2 folds");
  std::array<std::vector<std::size_t>, kNumClasses> by_class;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0 || y[i] >= static_cast<int>(kNumClasses))
      throw DataError("label out of range at position " + std::to_string(i));
    by_class[static_cast<std::size_t>(y[i])].push_back(i);
  }
  const std::size_t smallest = std::min(by_class[0].size(), by_class[1].size());
  if (k > smallest)
    throw DataError(std::to_string(k) + " folds requested but the smallest class has " +
                    std::to_string(smallest) + " samples");

  detail::Rng rng(seed);
  std::vector<std::size_t> order;
  for (auto& members : by_class) {
    rng.shuffle(std::span(members));
    order.insert(order.end(), members.begin(), members.end());
  }
  std::vector<std::size_t> fold_of(y.size());
  for (std::size_t p = 0; p < order.size(); ++p) fold_of[order[p]] = p % k;

  std::vector<Fold> folds(k);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t f = 0; f < k; ++f)
      (fold_of[i] == f ? folds[f].validation : folds[f].train).push_back(i);
  return folds;
}

inline LabelVector select(std::span<const int> y, std::span<const std::size_t> idx) {
  LabelVector out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = y[idx[i]];
  return out;
}

// trainer(X_train, y_train) must return a model usable with
// predict_labels(model, X). Returns one score per fold.
template <typename Trainer>
std::vector<double> cross_validate(Trainer&& trainer, const Matrix& x, std::span<const int> y,
                                   std::size_t k, std::uint64_t seed,
                                   CvMetric metric = CvMetric::macro_f1) {
  if (y.size() != x.rows()) throw DataError("feature rows and labels differ");
  const auto folds = stratified_folds(y, k, seed);
  std::vector<double> scores;
  scores.reserve(k);
  for (const auto& fold : folds) {
    const Matrix x_train = x.select_rows(fold.train);
    const Matrix x_val = x.select_rows(fold.validation);
    const LabelVector y_train = select(y, fold.train);
    const LabelVector y_val = select(y, fold.validation);
    const auto model = trainer(x_train, y_train);
    const LabelVector pred = predict_labels(model, x_val);
    scores.push_back(score_labels(metric, y_val, pred));
  }
  return scores;
}

struct SvmGrid {
  std::vector<Kernel> kernels{Kernel::linear, Kernel::rbf, Kernel::poly, Kernel::sigmoid};
  std::vector<double> C{0.1, 1.0, 10.0, 100.0};
  std::vector<GammaSpec> gammas{GammaSpec::scale(), GammaSpec::automatic()};

  // kernel-major, then C, then gamma
  std::vector<SvmParams> expand(const SvmParams& base = {}) const {
    std::vector<SvmParams> out;
    for (auto k : kernels)
      for (double c : C)
        for (const auto& g : gammas) {
          SvmParams p = base;
          p.kernel = k;
          p.C = c;
          p.gamma = g;
          out.push_back(p);
        }
    return out;
  }
};

struct GridPoint {
  SvmParams params;
  std::vector<double> fold_scores;
  double mean_score = 0.0;
};

struct CvResult {
  std::vector<GridPoint> points;
  std::size_t best_index = 0;

  const GridPoint& best() const { return points.at(best_index); }
};

struct GridSearchResult {
  CvResult cv;
  SvmModel model;  // best parameters refit on all rows
};

struct GridSearchOptions {
  std::size_t folds = 5;
  std::uint64_t seed = 42;
  CvMetric metric = CvMetric::macro_f1;
  std::size_t threads = 0;
};

namespace detail {

// Upper triangle of X X^T mirrored into a full matrix.
inline Matrix gram_matrix(const Matrix& x) {
  const std::size_t n = x.rows();
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g(i, j) = g(j, i) = dot(x.row(i), x.row(j));
  return g;
}

// Trains on `train` and scores `validation`, reading all dot products from a
// precomputed Gram matrix.
inline double score_fold(const Matrix& x, const Matrix& gram, std::span<const int> y,
                         const Fold& fold, const SvmParams& params, double variance,
                         CvMetric metric) {
  const auto& tr = fold.train;
  const std::size_t n = tr.size();
  const KernelFunction k{params.kernel, resolve_gamma(params.gamma, x.cols(), variance),
                         params.degree, params.coef0};
  std::vector<int> sign(n);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    sign[i] = class_sign(y[tr[i]]);
    const double g = gram(tr[i], tr[i]);
    diag[i] = k(g, g, g);
  }
  KernelRowCache cache(n, params.cache_rows, [&](std::size_t i, std::span<double> out) {
    const std::size_t a = tr[i];
    for (std::size_t t = 0; t < n; ++t) out[t] = k(gram(a, tr[t]), gram(a, a), gram(tr[t], tr[t]));
  });
  const auto res = solve_smo(sign, params.C, diag, cache, params.tolerance, params.max_iterations);

  LabelVector y_val(fold.validation.size());
  LabelVector pred(fold.validation.size());
  for (std::size_t v = 0; v < fold.validation.size(); ++v) {
    const std::size_t b = fold.validation[v];
    double f = -res.rho;
    for (std::size_t t = 0; t < n; ++t)
      if (res.alpha[t] > 0.0)
        f += res.alpha[t] * sign[t] * k(gram(tr[t], b), gram(tr[t], tr[t]), gram(b, b));
    pred[v] = f > 0.0 ? 1 : 0;
    y_val[v] = y[b];
  }
  return score_labels(metric, y_val, pred);
}

}  // namespace detail

// Exhaustive search over the grid scored by k-fold cross-validation; the
// best mean score wins, earlier grid points win ties.
inline GridSearchResult svm_grid_search(const Matrix& x, std::span<const int> y,
                                        const SvmGrid& grid = {},
                                        const GridSearchOptions& options = {},
                                        const SvmParams& base = {}) {
  detail::check_binary_labels(y, x.rows());
  detail::check_finite(x);
  const auto folds = stratified_folds(y, options.folds, options.seed);
  const auto params = grid.expand(base);
  if (params.empty()) throw UsageError("empty SVM parameter grid");

  const Matrix gram = detail::gram_matrix(x);
  std::vector<double> variance(folds.size());
  for (std::size_t f = 0; f < folds.size(); ++f)
    variance[f] = matrix_variance(x, folds[f].train);

  const std::size_t n_folds = folds.size();
  std::vector<double> scores(params.size() * n_folds);
  detail::parallel_for(scores.size(), options.threads, [&](std::size_t task) {
    const std::size_t p = task / n_folds;
    const std::size_t f = task % n_folds;
    scores[task] = detail::score_fold(x, gram, y, folds[f], params[p], variance[f],
                                      options.metric);
  });

  GridSearchResult out;
  double best = -1.0;
  for (std::size_t p = 0; p < params.size(); ++p) {
    GridPoint gp;
    gp.params = params[p];
    gp.fold_scores.assign(scores.begin() + static_cast<std::ptrdiff_t>(p * n_folds),
                          scores.begin() + static_cast<std::ptrdiff_t>((p + 1) * n_folds));
    double sum = 0.0;
    for (double s : gp.fold_scores) sum += s;
    gp.mean_score = sum / static_cast<double>(n_folds);
    if (gp.mean_score > best) {
      best = gp.mean_score;
      out.cv.best_index = p;
    }
    out.cv.points.push_back(std::move(gp));
  }
  out.model = train_svm(x, y, out.cv.best().params);
  return out;
}

}  // namespace revdetect

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "revdetect/error.hpp"
#include "revdetect/matrix.hpp"
#include "revdetect/svm.hpp"
#include "revdetect/tree.hpp"

namespace revdetect {

struct BoostingOptions {
  std::size_t n_rounds = 100;
  double learning_rate = 0.1;
  std::size_t max_depth = 6;
  std::size_t min_samples_split = 2;
};

inline double sigmoid(double f) {
  if (f >= 0.0) return 1.0 / (1.0 + std::exp(-f));
  const double e = std::exp(f);
  return e / (1.0 + e);
}

// -[y log p + (1-y) log(1-p)] with p = sigmoid(f)
inline double logistic_loss(double f, int y) {
  const double softplus = f > 0.0 ? f + std::log1p(std::exp(-f)) : std::log1p(std::exp(f));
  return softplus - (y == 1 ? f : 0.0);
}

// Binary logistic gradient boosting. Scores are log-odds of class 1.
class GbModel {
 public:
  double f0 = 0.0;     // log-odds of the class-1 prior
  double prior = 0.5;  // n1 / n, returned as-is before any tree is added
  double learning_rate = 0.1;
  std::size_t max_depth = 6;
  std::vector<DecisionTree> trees;
  std::size_t n_features = 0;
  // Mean training log-loss after 0, 1, ..., n rounds. Not persisted.
  std::vector<double> train_loss;

  double raw_score(std::span<const double> x, std::size_t rounds) const {
    double f = f0;
    rounds = std::min(rounds, trees.size());
    for (std::size_t t = 0; t < rounds; ++t) f += learning_rate * trees[t].leaf_for(x).value;
    return f;
  }
  double raw_score(std::span<const double> x) const { return raw_score(x, trees.size()); }

  ClassProbs proba(std::span<const double> x, std::size_t rounds) const {
    // sigmoid(f0) can be an ulp away from the prior it encodes
    if (rounds == 0 || trees.empty()) return {1.0 - prior, prior};
    const double p1 = sigmoid(raw_score(x, rounds));
    return {1.0 - p1, p1};
  }
  ClassProbs proba(std::span<const double> x) const { return proba(x, trees.size()); }

  int predict(std::span<const double> x) const { return argmax(proba(x)); }
};

namespace detail {

// Every column's (value, row) pairs in ascending value order, stored
// column-contiguous so split scans stream through memory.
struct SortedColumns {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;
  std::vector<std::uint32_t> index;

  explicit SortedColumns(const Matrix& x) : rows(x.rows()), cols(x.cols()) {
    values.resize(rows * cols);
    index.resize(rows * cols);
    std::vector<std::pair<double, std::uint32_t>> col(rows);
    for (std::size_t f = 0; f < cols; ++f) {
      for (std::size_t r = 0; r < rows; ++r) col[r] = {x(r, f), static_cast<std::uint32_t>(r)};
      std::sort(col.begin(), col.end());
      for (std::size_t r = 0; r < rows; ++r) {
        values[f * rows + r] = col[r].first;
        index[f * rows + r] = col[r].second;
      }
    }
  }
};

// Level-wise least-squares regression tree on the residuals, leaves set to
// the Newton step sum(residual) / sum(hessian).
inline DecisionTree fit_newton_tree(const Matrix& x, const SortedColumns& sorted,
                                    std::span<const double> residual,
                                    std::span<const double> hessian, std::size_t max_depth,
                                    std::size_t min_split) {
  constexpr double kMinGain = 1e-12;
  const std::size_t n = x.rows();
  DecisionTree tree;
  tree.nodes.emplace_back();
  std::vector<std::int32_t> node_of(n, 0);
  std::vector<std::uint32_t> active{0};

  struct Stat {
    double sum = 0.0;
    double count = 0.0;
    double left_sum = 0.0;
    double left_count = 0.0;
    double last = 0.0;
    double best_gain = kMinGain;
    std::int32_t best_feature = -1;
    double best_threshold = 0.0;
  };

  for (std::size_t depth = 0; depth < max_depth && !active.empty(); ++depth) {
    std::vector<std::int32_t> slot(tree.nodes.size(), -1);
    std::vector<Stat> stats(active.size());
    for (std::size_t k = 0; k < active.size(); ++k)
      slot[active[k]] = static_cast<std::int32_t>(k);
    for (std::size_t s = 0; s < n; ++s) {
      if (node_of[s] < 0) continue;
      const auto k = slot[static_cast<std::size_t>(node_of[s])];
      if (k < 0) continue;
      stats[static_cast<std::size_t>(k)].sum += residual[s];
      stats[static_cast<std::size_t>(k)].count += 1.0;
    }
    std::vector<std::int8_t> splittable(active.size());
    bool any = false;
    for (std::size_t k = 0; k < active.size(); ++k) {
      splittable[k] = stats[k].count >= static_cast<double>(min_split);
      any = any || splittable[k];
    }
    if (!any) break;

    for (std::size_t f = 0; f < sorted.cols; ++f) {
      for (auto& st : stats) {
        st.left_sum = 0.0;
        st.left_count = 0.0;
      }
      const double* vals = sorted.values.data() + f * sorted.rows;
      const std::uint32_t* rows = sorted.index.data() + f * sorted.rows;
      for (std::size_t r = 0; r < n; ++r) {
        const auto s = rows[r];
        const auto node = node_of[s];
        if (node < 0) continue;
        const auto k = slot[static_cast<std::size_t>(node)];
        if (k < 0 || !splittable[static_cast<std::size_t>(k)]) continue;
        auto& st = stats[static_cast<std::size_t>(k)];
        const double v = vals[r];
        if (st.left_count > 0.0 && v > st.last) {
          const double rs = st.sum - st.left_sum;
          const double rc = st.count - st.left_count;
          const double gain = st.left_sum * st.left_sum / st.left_count + rs * rs / rc -
                              st.sum * st.sum / st.count;
          if (gain > st.best_gain) {
            st.best_gain = gain;
            st.best_feature = static_cast<std::int32_t>(f);
            st.best_threshold = split_threshold(st.last, v);
          }
        }
        st.left_sum += residual[s];
        st.left_count += 1.0;
        st.last = v;
      }
    }

    std::vector<std::uint32_t> next;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const auto& st = stats[k];
      if (st.best_feature < 0) continue;
      const auto id = active[k];
      const auto left = static_cast<std::uint32_t>(tree.nodes.size());
      tree.nodes.emplace_back();
      tree.nodes.emplace_back();
      tree.nodes[id].feature = st.best_feature;
      tree.nodes[id].threshold = st.best_threshold;
      tree.nodes[id].left = left;
      tree.nodes[id].right = left + 1;
      next.push_back(left);
      next.push_back(left + 1);
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (node_of[s] < 0) continue;
      const auto& node = tree.nodes[static_cast<std::size_t>(node_of[s])];
      if (node.is_leaf()) continue;
      node_of[s] = static_cast<std::int32_t>(
          x(s, static_cast<std::size_t>(node.feature)) <= node.threshold ? node.left
                                                                          : node.right);
    }
    active = std::move(next);
  }

  std::vector<double> num(tree.nodes.size(), 0.0);
  std::vector<double> den(tree.nodes.size(), 0.0);
  for (std::size_t s = 0; s < n; ++s) {
    const auto leaf = static_cast<std::size_t>(node_of[s]);
    num[leaf] += residual[s];
    den[leaf] += hessian[s];
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i)
    if (tree.nodes[i].is_leaf())
      tree.nodes[i].value = std::fabs(den[i]) < 1e-150 ? 0.0 : num[i] / den[i];
  return tree;
}

}  // namespace detail

inline GbModel train_gradient_boosting(const Matrix& x, std::span<const int> y,
                                       const BoostingOptions& options = {}) {
  detail::check_binary_labels(y, x.rows());
  if (!(options.learning_rate > 0.0)) throw UsageError("learning rate must be positive");
  const auto n1 = static_cast<double>(std::count(y.begin(), y.end(), 1));
  const auto n = static_cast<double>(y.size());
  if (n1 == 0.0 || n1 == n) throw DataError("gradient boosting needs both classes");
  detail::check_finite(x);

  GbModel m;
  m.learning_rate = options.learning_rate;
  m.max_depth = options.max_depth;
  m.n_features = x.cols();
  m.prior = n1 / n;
  m.f0 = std::log(n1 / (n - n1));

  const std::size_t rows = x.rows();
  std::vector<double> score(rows, m.f0);
  std::vector<double> residual(rows);
  std::vector<double> hessian(rows);
  auto mean_loss = [&] {
    double l = 0.0;
    for (std::size_t i = 0; i < rows; ++i) l += logistic_loss(score[i], y[i]);
    return l / n;
  };
  m.train_loss.push_back(mean_loss());

  const detail::SortedColumns sorted(x);
  for (std::size_t round = 0; round < options.n_rounds; ++round) {
    for (std::size_t i = 0; i < rows; ++i) {
      const double p = sigmoid(score[i]);
      residual[i] = static_cast<double>(y[i]) - p;
      hessian[i] = p * (1.0 - p);
    }
    auto tree = detail::fit_newton_tree(x, sorted, residual, hessian, options.max_depth,
                                        options.min_samples_split);
    for (std::size_t i = 0; i < rows; ++i)
      score[i] += m.learning_rate * tree.leaf_for(x.row(i)).value;
    m.trees.push_back(std::move(tree));
    m.train_loss.push_back(mean_loss());
  }
  return m;
}

}  // namespace revdetect

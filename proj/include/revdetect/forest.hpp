#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "revdetect/detail/parallel.hpp"
#include "revdetect/detail/random.hpp"
#include "revdetect/error.hpp"
#include "revdetect/matrix.hpp"
#include "revdetect/svm.hpp"
#include "revdetect/tree.hpp"

namespace revdetect {

struct ForestOptions {
  std::size_t n_trees = 100;
  // Candidate features per split; defaults to floor(sqrt(n_features)).
  std::optional<std::size_t> max_features;
  std::size_t min_samples_split = 2;
  std::uint64_t seed = 42;
  std::size_t threads = 0;  // 0 = hardware concurrency
};

class ForestModel {
 public:
  std::vector<DecisionTree> trees;
  std::size_t n_features = 0;
  std::uint64_t seed = 0;

  // Fraction of trees voting for each class.
  ClassProbs proba(std::span<const double> x) const {
    ClassProbs votes{};
    for (const auto& t : trees) votes[static_cast<std::size_t>(tree_vote(t, x))] += 1.0;
    const double n = static_cast<double>(trees.size());
    return {votes[0] / n, votes[1] / n};
  }

  int predict(std::span<const double> x) const { return argmax(proba(x)); }

  static int tree_vote(const DecisionTree& t, std::span<const double> x) {
    const auto& leaf = t.leaf_for(x);
    return leaf.class_counts[1] > leaf.class_counts[0] ? 1 : 0;
  }
};

namespace detail {

// Grows one Gini tree until leaves are pure or smaller than min_split.
// Candidate features are drawn without replacement; the search continues
// past max_features until some feature separates the node.
inline DecisionTree grow_gini_tree(const Matrix& x, std::span<const int> y,
                                   std::vector<std::uint32_t> samples, std::size_t max_features,
                                   std::size_t min_split, Rng& rng) {
  const std::size_t n_feat = x.cols();
  DecisionTree tree;
  tree.nodes.emplace_back();

  struct Pending {
    std::uint32_t node;
    std::vector<std::uint32_t> samples;
  };
  std::vector<Pending> stack;
  stack.push_back({0, std::move(samples)});
  std::vector<std::uint32_t> features(n_feat);
  std::vector<std::pair<double, int>> column;

  while (!stack.empty()) {
    Pending job = std::move(stack.back());
    stack.pop_back();
    std::array<double, kNumClasses> counts{};
    for (auto s : job.samples) counts[static_cast<std::size_t>(y[s])] += 1.0;
    tree.nodes[job.node].class_counts = counts;
    const std::size_t m = job.samples.size();
    if (counts[0] == 0.0 || counts[1] == 0.0 || m < min_split) continue;

    for (std::size_t f = 0; f < n_feat; ++f) features[f] = static_cast<std::uint32_t>(f);
    double best_score = -1.0;
    std::int32_t best_feature = -1;
    double best_threshold = 0.0;
    for (std::size_t k = 0; k < n_feat; ++k) {
      if (k >= max_features && best_feature >= 0) break;
      const std::size_t pick = k + static_cast<std::size_t>(rng.index(n_feat - k));
      std::swap(features[k], features[pick]);
      const std::uint32_t f = features[k];

      column.clear();
      for (auto s : job.samples) column.emplace_back(x(s, f), y[s]);
      std::sort(column.begin(), column.end());
      if (column.front().first == column.back().first) continue;

      std::array<double, kNumClasses> left{};
      for (std::size_t i = 0; i + 1 < m; ++i) {
        left[static_cast<std::size_t>(column[i].second)] += 1.0;
        if (column[i].first == column[i + 1].first) continue;
        const double nl = static_cast<double>(i + 1);
        const double nr = static_cast<double>(m) - nl;
        const double r0 = counts[0] - left[0];
        const double r1 = counts[1] - left[1];
        // maximizing this minimizes the weighted child Gini impurity
        const double score =
            (left[0] * left[0] + left[1] * left[1]) / nl + (r0 * r0 + r1 * r1) / nr;
        if (score > best_score) {
          best_score = score;
          best_feature = static_cast<std::int32_t>(f);
          best_threshold = split_threshold(column[i].first, column[i + 1].first);
        }
      }
    }
    if (best_feature < 0) continue;

    std::vector<std::uint32_t> left_samples;
    std::vector<std::uint32_t> right_samples;
    for (auto s : job.samples)
      (x(s, static_cast<std::size_t>(best_feature)) <= best_threshold ? left_samples
                                                                       : right_samples)
          .push_back(s);
    const auto left_id = static_cast<std::uint32_t>(tree.nodes.size());
    tree.nodes.emplace_back();
    tree.nodes.emplace_back();
    auto& node = tree.nodes[job.node];
    node.feature = best_feature;
    node.threshold = best_threshold;
    node.left = left_id;
    node.right = left_id + 1;
    stack.push_back({left_id + 1, std::move(right_samples)});
    stack.push_back({left_id, std::move(left_samples)});
  }
  return tree;
}

}  // namespace detail

// Tree t uses seed + t for its bootstrap and feature draws, so the model
// does not depend on how trees are scheduled across threads.
inline ForestModel train_random_forest(const Matrix& x, std::span<const int> y,
                                       const ForestOptions& options = {}) {
  detail::check_binary_labels(y, x.rows());
  if (x.rows() == 0 || x.cols() == 0) throw DataError("random forest needs non-empty data");
  if (options.n_trees == 0) throw UsageError("random forest needs at least one tree");
  detail::check_finite(x);

  const std::size_t max_features = std::clamp<std::size_t>(
      options.max_features.value_or(static_cast<std::size_t>(
          std::floor(std::sqrt(static_cast<double>(x.cols()))))),
      1, x.cols());

  ForestModel model;
  model.n_features = x.cols();
  model.seed = options.seed;
  model.trees.resize(options.n_trees);
  const std::size_t n = x.rows();
  detail::parallel_for(options.n_trees, options.threads, [&](std::size_t t) {
    detail::Rng rng(options.seed + t);
    std::vector<std::uint32_t> bootstrap(n);
    for (auto& s : bootstrap) s = static_cast<std::uint32_t>(rng.index(n));
    model.trees[t] = detail::grow_gini_tree(x, y, std::move(bootstrap), max_features,
                                            options.min_samples_split, rng);
  });
  return model;
}

}  // namespace revdetect

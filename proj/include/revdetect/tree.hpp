#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "revdetect/corpus.hpp"

namespace revdetect {

// Binary decision tree; samples with x[feature] <= threshold go left.
struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0.0;
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double value = 0.0;  // regression output
  std::array<double, kNumClasses> class_counts{};

  bool is_leaf() const noexcept { return feature < 0; }
  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct DecisionTree {
  std::vector<TreeNode> nodes;

  const TreeNode& leaf_for(std::span<const double> x) const {
    std::size_t i = 0;
    while (!nodes[i].is_leaf()) {
      const auto& n = nodes[i];
      i = x[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
    }
    return nodes[i];
  }

  std::size_t depth() const {
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
    std::size_t best = 0;
    while (!stack.empty()) {
      const auto [i, d] = stack.back();
      stack.pop_back();
      best = std::max(best, d);
      if (!nodes[i].is_leaf()) {
        stack.emplace_back(nodes[i].left, d + 1);
        stack.emplace_back(nodes[i].right, d + 1);
      }
    }
    return best;
  }

  friend bool operator==(const DecisionTree&, const DecisionTree&) = default;
};

namespace detail {

// Split point between two consecutive distinct sorted values. Falls back to
// the lower value when the midpoint rounds up to the upper one.
inline double split_threshold(double lower, double upper) {
  const double mid = lower + (upper - lower) / 2.0;
  return mid >= upper ? lower : mid;
}

}  // namespace detail

}  // namespace revdetect

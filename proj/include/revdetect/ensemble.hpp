#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "revdetect/boosting.hpp"
#include "revdetect/forest.hpp"
#include "revdetect/svm.hpp"

namespace revdetect {

using ProbabilityMatrix = std::vector<ClassProbs>;
using MemberModel = std::variant<SvmModel, ForestModel, GbModel>;

// Soft voting: unweighted mean of the members' class probabilities.
struct VotingModel {
  std::vector<MemberModel> members;
};

using Classifier = std::variant<SvmModel, ForestModel, GbModel, VotingModel>;

inline std::size_t n_features(const SvmModel& m) { return m.n_features(); }
inline std::size_t n_features(const ForestModel& m) { return m.n_features; }
inline std::size_t n_features(const GbModel& m) { return m.n_features; }
inline std::size_t n_features(const MemberModel& m) {
  return std::visit([](const auto& v) { return n_features(v); }, m);
}
inline std::size_t n_features(const VotingModel& m) {
  return m.members.empty() ? 0 : n_features(m.members.front());
}
inline std::size_t n_features(const Classifier& m) {
  return std::visit([](const auto& v) { return n_features(v); }, m);
}

inline std::string_view model_name(const Classifier& m) {
  switch (m.index()) {
    case 0: return "svm";
    case 1: return "random_forest";
    case 2: return "gradient_boosting";
    default: return "soft_voting";
  }
}

namespace detail {

template <typename Model>
void check_dimension(const Model& m, const Matrix& x) {
  if (x.cols() != n_features(m))
    throw DataError("model expects " + std::to_string(n_features(m)) + " features, got " +
                    std::to_string(x.cols()));
}

template <typename Model>
ProbabilityMatrix rowwise_proba(const Model& m, const Matrix& x) {
  check_dimension(m, x);
  ProbabilityMatrix out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = m.proba(x.row(i));
  return out;
}

}  // namespace detail

inline ProbabilityMatrix predict_proba(const SvmModel& m, const Matrix& x) {
  return detail::rowwise_proba(m, x);
}
inline ProbabilityMatrix predict_proba(const ForestModel& m, const Matrix& x) {
  return detail::rowwise_proba(m, x);
}
inline ProbabilityMatrix predict_proba(const GbModel& m, const Matrix& x) {
  return detail::rowwise_proba(m, x);
}
inline ProbabilityMatrix predict_proba(const MemberModel& m, const Matrix& x) {
  return std::visit([&](const auto& v) { return predict_proba(v, x); }, m);
}

inline ProbabilityMatrix average_probabilities(std::span<const ProbabilityMatrix> parts) {
  if (parts.empty()) throw UsageError("nothing to average");
  ProbabilityMatrix out(parts.front().size(), ClassProbs{});
  for (const auto& p : parts) {
    if (p.size() != out.size()) throw DataError("member prediction counts differ");
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t c = 0; c < kNumClasses; ++c) out[i][c] += p[i][c];
  }
  const double k = static_cast<double>(parts.size());
  for (auto& row : out)
    for (auto& v : row) v /= k;
  return out;
}

inline LabelVector labels_from_proba(const ProbabilityMatrix& p) {
  LabelVector out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = argmax(p[i]);
  return out;
}

struct VoteResult {
  ProbabilityMatrix proba;
  LabelVector labels;
};

inline VoteResult soft_vote(std::span<const MemberModel> members, const Matrix& x) {
  if (members.size() < 2) throw UsageError("soft voting needs at least two members");
  const std::size_t dim = n_features(members.front());
  for (const auto& m : members)
    if (n_features(m) != dim) throw DataError("voting members disagree on feature count");
  std::vector<ProbabilityMatrix> parts;
  parts.reserve(members.size());
  for (const auto& m : members) parts.push_back(predict_proba(m, x));
  VoteResult r;
  r.proba = average_probabilities(parts);
  r.labels = labels_from_proba(r.proba);
  return r;
}

inline ProbabilityMatrix predict_proba(const VotingModel& m, const Matrix& x) {
  return soft_vote(m.members, x).proba;
}

inline ProbabilityMatrix predict_proba(const Classifier& m, const Matrix& x) {
  return std::visit([&](const auto& v) { return predict_proba(v, x); }, m);
}

// SVM labels come from the sign of the decision function, which is what the
// solver optimizes; every other model takes the argmax of its probabilities.
inline LabelVector predict_labels(const SvmModel& m, const Matrix& x) {
  detail::check_dimension(m, x);
  LabelVector out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = m.predict(x.row(i));
  return out;
}
inline LabelVector predict_labels(const ForestModel& m, const Matrix& x) {
  return labels_from_proba(predict_proba(m, x));
}
inline LabelVector predict_labels(const GbModel& m, const Matrix& x) {
  return labels_from_proba(predict_proba(m, x));
}
inline LabelVector predict_labels(const VotingModel& m, const Matrix& x) {
  return labels_from_proba(predict_proba(m, x));
}
inline LabelVector predict_labels(const Classifier& m, const Matrix& x) {
  return std::visit([&](const auto& v) { return predict_labels(v, x); }, m);
}

}  // namespace revdetect

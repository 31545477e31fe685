#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "revdetect/error.hpp"
#include "revdetect/textprep.hpp"

namespace revdetect {

struct SparseVector {
  std::size_t dim = 0;
  // (column, value) sorted by column, no duplicate columns
  std::vector<std::pair<std::uint32_t, double>> entries;

  bool is_zero() const noexcept { return entries.empty(); }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

struct TfidfOptions {
  std::size_t max_features = 5000;
  std::size_t ngram_min = 1;
  std::size_t ngram_max = 2;
};

// All n-grams of doc with ngram_min <= n <= ngram_max; words are joined by a
// single space.
inline std::vector<std::string> extract_ngrams(std::span<const std::string> tokens,
                                               std::size_t ngram_min,
                                               std::size_t ngram_max) {
  std::vector<std::string> out;
  for (std::size_t n = ngram_min; n <= ngram_max; ++n) {
    if (n == 0 || n > tokens.size()) continue;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string gram = tokens[i];
      for (std::size_t k = 1; k < n; ++k) {
        gram.push_back(' ');
        gram += tokens[i + k];
      }
      out.push_back(std::move(gram));
    }
  }
  return out;
}

class TfidfModel {
 public:
  TfidfModel() = default;

  // terms must be sorted and unique; idf is parallel to terms.
  TfidfModel(std::vector<std::string> terms, std::vector<double> idf,
             TfidfOptions options, std::size_t document_count)
      : terms_(std::move(terms)),
        idf_(std::move(idf)),
        options_(options),
        document_count_(document_count) {
    if (terms_.size() != idf_.size())
      throw FormatError("tf-idf vocabulary and idf sizes differ");
    index_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
  }

  std::size_t vocabulary_size() const noexcept { return terms_.size(); }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  const std::vector<double>& idf() const noexcept { return idf_; }
  const TfidfOptions& options() const noexcept { return options_; }
  std::size_t document_count() const noexcept { return document_count_; }

  std::optional<std::size_t> index_of(const std::string& term) const {
    const auto it = index_.find(term);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<double> idf_of(const std::string& term) const {
    const auto i = index_of(term);
    if (!i) return std::nullopt;
    return idf_[*i];
  }

  // Raw counts times idf, then L2-normalized. A document with no known term
  // maps to the zero vector.
  SparseVector transform(const TokenizedDoc& doc) const {
    std::unordered_map<std::uint32_t, double> counts;
    for (const auto& gram : extract_ngrams(doc.tokens, options_.ngram_min, options_.ngram_max)) {
      if (const auto it = index_.find(gram); it != index_.end())
        counts[static_cast<std::uint32_t>(it->second)] += 1.0;
    }
    SparseVector v;
    v.dim = terms_.size();
    v.entries.assign(counts.begin(), counts.end());
    std::sort(v.entries.begin(), v.entries.end());
    double norm_sq = 0.0;
    for (auto& [col, value] : v.entries) {
      value *= idf_[col];
      norm_sq += value * value;
    }
    if (norm_sq > 0.0) {
      const double norm = std::sqrt(norm_sq);
      for (auto& e : v.entries) e.second /= norm;
    }
    return v;
  }

 private:
  std::vector<std::string> terms_;
  std::vector<double> idf_;
  TfidfOptions options_;
  std::size_t document_count_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

// Vocabulary = the max_features most frequent n-grams over the corpus
// (ties broken lexicographically); columns are ordered lexicographically.
// idf(t) = ln((1 + N) / (1 + df(t))) + 1.
inline TfidfModel fit_tfidf(std::span<const TokenizedDoc> docs,
                            const TfidfOptions& options = {}) {
  if (options.ngram_min == 0 || options.ngram_min > options.ngram_max)
    throw UsageError("invalid n-gram range");
  if (options.max_features == 0) throw UsageError("max_features must be positive");

  struct TermStats {
    std::size_t count = 0;
    std::size_t df = 0;
    std::size_t last_doc = SIZE_MAX;
  };
  std::unordered_map<std::string, TermStats> stats;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (auto& gram : extract_ngrams(docs[d].tokens, options.ngram_min, options.ngram_max)) {
      auto& s = stats[std::move(gram)];
      ++s.count;
      if (s.last_doc != d) {
        ++s.df;
        s.last_doc = d;
      }
    }
  }
  if (stats.empty()) throw DataError("cannot fit tf-idf: every document is empty");

  std::vector<std::pair<std::string, TermStats>> ranked(stats.begin(), stats.end());
  if (ranked.size() > options.max_features) {
    std::nth_element(ranked.begin(), ranked.begin() + options.max_features, ranked.end(),
                     [](const auto& a, const auto& b) {
                       if (a.second.count != b.second.count)
                         return a.second.count > b.second.count;
                       return a.first < b.first;
                     });
    ranked.resize(options.max_features);
  }
  std::sort(ranked.begin(), ranked.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const double n = static_cast<double>(docs.size());
  std::vector<std::string> terms;
  std::vector<double> idf;
  terms.reserve(ranked.size());
  idf.reserve(ranked.size());
  for (auto& [term, s] : ranked) {
    terms.push_back(term);
    idf.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(s.df))) + 1.0);
  }
  return TfidfModel(std::move(terms), std::move(idf), options, docs.size());
}

inline SparseVector transform_tfidf(const TfidfModel& model, const TokenizedDoc& doc) {
  return model.transform(doc);
}

}  // namespace revdetect

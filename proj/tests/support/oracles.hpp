#pragma once

// Brute-force reference computations used to check the library. They trade
// speed for being obviously correct and share no code with it.

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace revdetect::testing {

struct TfidfOracle {
  std::vector<std::string> terms;           // sorted
  std::vector<double> idf;                  // per term
  std::vector<std::vector<double>> rows;    // dense, L2-normalised
};

inline std::vector<std::string> oracle_ngrams(const std::vector<std::string>& tokens,
                                              std::size_t lo, std::size_t hi) {
  std::vector<std::string> out;
  for (std::size_t n = lo; n <= hi; ++n)
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      std::string g = tokens[i];
      for (std::size_t k = 1; k < n; ++k) g += " " + tokens[i + k];
      out.push_back(g);
    }
  return out;
}

// Vocabulary: the max_features most frequent n-grams over the corpus, ties
// broken alphabetically. idf = ln((1+N)/(1+df)) + 1, tf = raw count.
inline TfidfOracle tfidf_oracle(const std::vector<std::vector<std::string>>& docs,
                                std::size_t max_features, std::size_t lo, std::size_t hi) {
  std::map<std::string, std::size_t> total;
  std::map<std::string, std::size_t> df;
  std::vector<std::map<std::string, std::size_t>> tf(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const auto& g : oracle_ngrams(docs[d], lo, hi)) {
      ++total[g];
      ++tf[d][g];
    }
    for (const auto& [g, c] : tf[d]) ++df[g];
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(total.begin(), total.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > max_features) ranked.resize(max_features);

  TfidfOracle o;
  for (const auto& [g, c] : ranked) o.terms.push_back(g);
  std::sort(o.terms.begin(), o.terms.end());
  const double n = static_cast<double>(docs.size());
  for (const auto& t : o.terms)
    o.idf.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(df[t]))) + 1.0);
  for (std::size_t d = 0; d < docs.size(); ++d) {
    std::vector<double> row(o.terms.size(), 0.0);
    double sq = 0.0;
    for (std::size_t j = 0; j < o.terms.size(); ++j) {
      const auto it = tf[d].find(o.terms[j]);
      if (it != tf[d].end()) row[j] = static_cast<double>(it->second) * o.idf[j];
      sq += row[j] * row[j];
    }
    if (sq > 0.0)
      for (auto& v : row) v /= std::sqrt(sq);
    o.rows.push_back(std::move(row));
  }
  return o;
}

struct MetricOracle {
  double precision[2];
  double recall[2];
  double f1[2];
  double macro_f1;
  double accuracy;
};

inline MetricOracle metric_oracle(const std::vector<int>& truth, const std::vector<int>& pred) {
  MetricOracle m{};
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) correct += truth[i] == pred[i];
  for (int c = 0; c < 2; ++c) {
    double tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
      if (pred[i] == c && truth[i] == c) tp += 1;
      if (pred[i] == c && truth[i] != c) fp += 1;
      if (pred[i] != c && truth[i] == c) fn += 1;
    }
    m.precision[c] = tp + fp > 0 ? tp / (tp + fp) : 0.0;
    m.recall[c] = tp + fn > 0 ? tp / (tp + fn) : 0.0;
    const double pr = m.precision[c] + m.recall[c];
    m.f1[c] = pr > 0 ? 2 * m.precision[c] * m.recall[c] / pr : 0.0;
  }
  m.macro_f1 = (m.f1[0] + m.f1[1]) / 2;
  m.accuracy = static_cast<double>(correct) / static_cast<double>(truth.size());
  return m;
}

}  // namespace revdetect::testing

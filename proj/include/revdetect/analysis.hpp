#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "revdetect/corpus.hpp"
#include "revdetect/eval.hpp"
#include "revdetect/predictions.hpp"
#include "revdetect/textprep.hpp"

namespace revdetect {

enum class StatsTokens {
  pipeline,        // clean_text + tokenize, as the models see the text
  raw_whitespace,  // raw text split on whitespace
};

struct StatsOptions {
  StatsTokens tokens = StatsTokens::pipeline;
  CleanOptions clean;
};

struct ClassStats {
  std::size_t reviews = 0;
  double avg_word_count = 0.0;
  // Mean number of sentences per review, counted on raw text.
  double avg_sentences_per_review = 0.0;
  // Mean over reviews of distinct/total tokens; empty reviews are skipped.
  double lexical_diversity = 0.0;
};

struct CorpusStats {
  std::array<ClassStats, kNumClasses> per_class{};

  const ClassStats& operator[](Label l) const { return per_class[static_cast<std::size_t>(l)]; }
};

inline std::vector<std::string> stats_tokens(const Review& r, const StatsOptions& opts) {
  if (opts.tokens == StatsTokens::raw_whitespace) return whitespace_tokens(r.text);
  return tokenize(clean_text(r.text, opts.clean)).tokens;
}

inline double type_token_ratio(std::span<const std::string> tokens) {
  if (tokens.empty()) return 0.0;
  const std::unordered_set<std::string> distinct(tokens.begin(), tokens.end());
  return static_cast<double>(distinct.size()) / static_cast<double>(tokens.size());
}

inline CorpusStats corpus_statistics(const LabeledCorpus& corpus, const StatsOptions& opts = {}) {
  if (corpus.empty()) throw DataError("cannot compute statistics of an empty corpus");
  struct Acc {
    std::size_t reviews = 0;
    double words = 0.0;
    double sentences = 0.0;
    double diversity = 0.0;
    std::size_t nonempty = 0;
  };
  std::array<Acc, kNumClasses> acc{};
  for (const auto& r : corpus.reviews) {
    if (!r.label) throw DataError("review '" + r.id + "' has no label");
    auto& a = acc[static_cast<std::size_t>(*r.label)];
    const auto tokens = stats_tokens(r, opts);
    ++a.reviews;
    a.words += static_cast<double>(tokens.size());
    a.sentences += static_cast<double>(split_sentences(r.text).size());
    if (!tokens.empty()) {
      a.diversity += type_token_ratio(tokens);
      ++a.nonempty;
    }
  }
  CorpusStats s;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const auto& a = acc[c];
    auto& out = s.per_class[c];
    out.reviews = a.reviews;
    if (a.reviews == 0) continue;
    const double n = static_cast<double>(a.reviews);
    out.avg_word_count = a.words / n;
    out.avg_sentences_per_review = a.sentences / n;
    out.lexical_diversity = a.nonempty ? a.diversity / static_cast<double>(a.nonempty) : 0.0;
  }
  return s;
}

inline void write_stats(std::ostream& out, const CorpusStats& s) {
  out << "format=revdetect-stats/1\n";
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const auto name = label_name(static_cast<Label>(c));
    const auto& cs = s.per_class[c];
    out << name << ".avg_word_count=" << detail::format_double(cs.avg_word_count) << '\n';
    out << name << ".avg_sentences_per_review="
        << detail::format_double(cs.avg_sentences_per_review) << '\n';
    out << name << ".lexical_diversity=" << detail::format_double(cs.lexical_diversity) << '\n';
  }
}

// (token, count) in descending count order, ties lexicographic.
struct WordFrequencyTable {
  std::vector<std::pair<std::string, std::size_t>> entries;
};

inline WordFrequencyTable top_words(const LabeledCorpus& corpus, Label label, std::size_t n,
                                    const StatsOptions& opts = {}) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& r : corpus.reviews)
    if (r.label == label)
      for (auto& t : stats_tokens(r, opts)) ++counts[std::move(t)];
  WordFrequencyTable table;
  table.entries.assign(counts.begin(), counts.end());
  std::sort(table.entries.begin(), table.entries.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (table.entries.size() > n) table.entries.resize(n);
  return table;
}

inline void write_frequencies(std::ostream& out, const WordFrequencyTable& t) {
  out << "token\tcount\n";
  for (const auto& [tok, c] : t.entries) out << tok << '\t' << c << '\n';
}

struct MisclassifiedReview {
  std::string id;
  std::string text;
  Label gold = Label::ai;
  std::vector<bool> correct;  // parallel to MisclassificationTable::models
};

struct MisclassificationTable {
  std::vector<std::string> models;
  std::vector<MisclassifiedReview> rows;
};

using NamedPredictions = std::pair<std::string, std::vector<PredictionRow>>;

namespace detail {

inline std::unordered_map<std::string, Label> predicted_by_id(
    const LabeledCorpus& gold, std::span<const PredictionRow> predictions,
    const std::string& source) {
  std::unordered_map<std::string, Label> out;
  for (const auto& p : predictions) out.emplace(p.id, p.predicted);
  for (const auto& r : gold.reviews)
    if (!out.contains(r.id))
      throw DataError(source + ": no prediction for id '" + r.id + "'");
  return out;
}

inline std::string single_line(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; },
                  ' ');
  return s;
}

}  // namespace detail

// Reviews that more than one model got wrong, with each model's mark.
inline MisclassificationTable cross_model_misclassifications(
    const LabeledCorpus& gold, std::span<const NamedPredictions> predictions) {
  MisclassificationTable table;
  std::vector<std::unordered_map<std::string, Label>> lookup;
  for (const auto& [name, rows] : predictions) {
    table.models.push_back(name);
    lookup.push_back(detail::predicted_by_id(gold, rows, name));
  }
  for (const auto& r : gold.reviews) {
    if (!r.label) throw DataError("gold review '" + r.id + "' has no label");
    MisclassifiedReview row{r.id, r.text, *r.label, {}};
    std::size_t wrong = 0;
    for (const auto& l : lookup) {
      const bool ok = l.at(r.id) == *r.label;
      row.correct.push_back(ok);
      wrong += ok ? 0 : 1;
    }
    if (wrong > 1) table.rows.push_back(std::move(row));
  }
  return table;
}

inline void write_misclassifications(std::ostream& out, const MisclassificationTable& t) {
  out << "id\tgold";
  for (const auto& m : t.models) out << '\t' << detail::single_line(m);
  out << "\ttext\n";
  for (const auto& r : t.rows) {
    out << r.id << '\t' << label_name(r.gold);
    for (bool ok : r.correct) out << '\t' << (ok ? "correct" : "wrong");
    out << '\t' << detail::single_line(r.text) << '\n';
  }
}

struct ErrorEntry {
  std::string id;
  std::string text;
};

// AI is the positive class: a false positive is a human review predicted AI.
struct ErrorListing {
  std::vector<ErrorEntry> false_positives;
  std::vector<ErrorEntry> false_negatives;
};

inline ErrorListing error_listing(const LabeledCorpus& gold,
                                  std::span<const PredictionRow> predictions) {
  const auto pred = detail::predicted_by_id(gold, predictions, "predictions");
  if (pred.size() != gold.size())
    throw DataError("predictions name ids that are not in the gold file");
  ErrorListing out;
  for (const auto& r : gold.reviews) {
    if (!r.label) throw DataError("gold review '" + r.id + "' has no label");
    const Label p = pred.at(r.id);
    if (*r.label == Label::human && p == Label::ai)
      out.false_positives.push_back({r.id, r.text});
    else if (*r.label == Label::ai && p == Label::human)
      out.false_negatives.push_back({r.id, r.text});
  }
  return out;
}

inline void write_error_listing(std::ostream& out, const ErrorListing& e) {
  out << "kind\tid\ttext\n";
  for (const auto& x : e.false_positives)
    out << "false_positive\t" << x.id << '\t' << detail::single_line(x.text) << '\n';
  for (const auto& x : e.false_negatives)
    out << "false_negative\t" << x.id << '\t' << detail::single_line(x.text) << '\n';
}

}  // namespace revdetect

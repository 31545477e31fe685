#include <gtest/gtest.h>

#include <sstream>

#include "revdetect/analysis.hpp"

namespace revdetect {
namespace {

LabeledCorpus small_corpus() {
  LabeledCorpus c;
  c.reviews = {{"1", "நல்ல பொருள். நல்ல தரம்.", Label::ai},
               {"2", "a b c d", Label::ai},
               {"3", "super!!", Label::human},
               {"4", "x x", Label::human}};
  return c;
}

TEST(TypeTokenRatio, Basic) {
  EXPECT_DOUBLE_EQ(type_token_ratio(std::vector<std::string>{"a", "b", "a", "c"}), 0.75);
  EXPECT_EQ(type_token_ratio(std::vector<std::string>{}), 0.0);
}

TEST(CorpusStatistics, PerClassMeans) {
  const auto s = corpus_statistics(small_corpus());
  const auto& ai = s[Label::ai];
  EXPECT_EQ(ai.reviews, 2u);
  EXPECT_DOUBLE_EQ(ai.avg_word_count, 4.0);
  EXPECT_DOUBLE_EQ(ai.avg_sentences_per_review, 1.5);
  EXPECT_DOUBLE_EQ(ai.lexical_diversity, (0.75 + 1.0) / 2);
  const auto& hu = s[Label::human];
  EXPECT_DOUBLE_EQ(hu.avg_word_count, 1.5);
  EXPECT_DOUBLE_EQ(hu.lexical_diversity, (1.0 + 0.5) / 2);
}

TEST(CorpusStatistics, RawTokensKeepPunctuation) {
  LabeledCorpus c;
  c.reviews = {{"1", "!! ok", Label::ai}, {"2", "fine", Label::human}};
  StatsOptions raw;
  raw.tokens = StatsTokens::raw_whitespace;
  EXPECT_DOUBLE_EQ(corpus_statistics(c, raw)[Label::ai].avg_word_count, 2.0);
  EXPECT_DOUBLE_EQ(corpus_statistics(c)[Label::ai].avg_word_count, 1.0);
}

TEST(CorpusStatistics, WritesKv) {
  std::ostringstream out;
  write_stats(out, corpus_statistics(small_corpus()));
  const auto text = out.str();
  EXPECT_NE(text.find("AI.avg_word_count=4"), std::string::npos) << text;
  EXPECT_NE(text.find("HUMAN.lexical_diversity=0.75"), std::string::npos) << text;
}

TEST(TopWords, CountDescendingThenAlphabetic) {
  const auto t = top_words(small_corpus(), Label::ai, 2);
  ASSERT_EQ(t.entries.size(), 2u);
  EXPECT_EQ(t.entries[0], (std::pair<std::string, std::size_t>{"நல்ல", 2}));
  EXPECT_EQ(t.entries[1].second, 1u);
  EXPECT_EQ(t.entries[1].first, "a");
}

TEST(Misclassifications, RowsWrongForMoreThanOneModel) {
  const auto gold = small_corpus();
  auto preds = [](std::vector<Label> p) {
    std::vector<PredictionRow> rows;
    for (std::size_t i = 0; i < p.size(); ++i)
      rows.push_back({std::to_string(i + 1), std::nullopt, p[i], 0.5});
    return rows;
  };
  using L = Label;
  const std::vector<NamedPredictions> named{
      {"m1", preds({L::human, L::human, L::human, L::human})},
      {"m2", preds({L::human, L::ai, L::human, L::ai})},
      {"m3", preds({L::ai, L::ai, L::ai, L::ai})}};
  const auto t = cross_model_misclassifications(gold, named);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.rows[0].id, "1");
  EXPECT_EQ(t.rows[0].correct, (std::vector<bool>{false, false, true}));
  EXPECT_EQ(t.rows[1].id, "4");
  std::ostringstream out;
  write_misclassifications(out, t);
  EXPECT_EQ(out.str().substr(0, out.str().find('\n')), "id\tgold\tm1\tm2\tm3\ttext");
}

TEST(ErrorListing, SplitsFalsePositivesAndNegatives) {
  const std::vector<PredictionRow> p{{"1", {}, Label::human, 0.2},
                                     {"2", {}, Label::ai, 0.9},
                                     {"3", {}, Label::ai, 0.9},
                                     {"4", {}, Label::human, 0.1}};
  const auto e = error_listing(small_corpus(), p);
  ASSERT_EQ(e.false_negatives.size(), 1u);
  EXPECT_EQ(e.false_negatives[0].id, "1");
  ASSERT_EQ(e.false_positives.size(), 1u);
  EXPECT_EQ(e.false_positives[0].id, "3");
}

}  // namespace
}  // namespace revdetect

#include <gtest/gtest.h>

#include <sstream>

#include "revdetect/predictions.hpp"

namespace revdetect {
namespace {

std::vector<PredictionRow> parse(const std::string& s) {
  std::istringstream in(s);
  return read_predictions(in, "p.tsv");
}

TEST(Predictions, RoundTripIsExact) {
  const std::vector<PredictionRow> rows{{"a", Label::ai, Label::human, 0.1234567890123},
                                        {"b", std::nullopt, Label::ai, 1.0},
                                        {"c", Label::human, Label::human, 0.0}};
  std::ostringstream out;
  write_predictions(out, rows);
  EXPECT_EQ(out.str().substr(0, kPredictionsHeader.size()), kPredictionsHeader);
  EXPECT_EQ(parse(out.str()), rows);
}

TEST(Predictions, AcceptsForeignProducerLayout) {
  // what an external model would write: lower-case labels, CRLF, short floats
  const auto rows = parse("id\tgold\tpredicted\tp_ai\r\nx\tai\thuman\t0.25\r\ny\t\tAI\t1\r\n");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].gold, Label::ai);
  EXPECT_EQ(rows[0].predicted, Label::human);
  EXPECT_DOUBLE_EQ(rows[0].p_ai, 0.25);
  EXPECT_FALSE(rows[1].gold);
}

TEST(Predictions, RejectsMalformed) {
  EXPECT_THROW(parse(""), DataError);
  EXPECT_THROW(parse("id\tlabel\n"), DataError);
  EXPECT_THROW(parse("id\tgold\tpredicted\tp_ai\na\tAI\tAI\n"), DataError);
  EXPECT_THROW(parse("id\tgold\tpredicted\tp_ai\na\tAI\tAI\t1.5\n"), DataError);
  EXPECT_THROW(parse("id\tgold\tpredicted\tp_ai\na\tAI\tBOT\t0.5\n"), DataError);
  EXPECT_THROW(parse("id\tgold\tpredicted\tp_ai\na\tAI\tAI\tnan\n"), DataError);
  EXPECT_THROW(parse("id\tgold\tpredicted\tp_ai\na\tAI\tAI\t0.5\na\tAI\tAI\t0.5\n"),
               DataError);
}

TEST(Align, FollowsGoldOrder) {
  LabeledCorpus gold;
  gold.reviews = {{"a", "x", Label::ai}, {"b", "y", Label::human}};
  const std::vector<PredictionRow> preds{{"b", {}, Label::ai, 0.9}, {"a", {}, Label::ai, 0.8}};
  const auto al = align_predictions(gold, preds);
  EXPECT_EQ(al.y_true, (LabelVector{0, 1}));
  EXPECT_EQ(al.y_pred, (LabelVector{0, 0}));
}

TEST(Align, MissingAndUnknownIdsAreErrors) {
  LabeledCorpus gold;
  gold.reviews = {{"a", "x", Label::ai}, {"b", "y", Label::human}};
  const std::vector<PredictionRow> missing{{"a", {}, Label::ai, 0.9}};
  EXPECT_THROW(align_predictions(gold, missing), DataError);
  const std::vector<PredictionRow> extra{
      {"a", {}, Label::ai, 0.9}, {"b", {}, Label::ai, 0.9}, {"z", {}, Label::ai, 0.9}};
  EXPECT_THROW(align_predictions(gold, extra), DataError);
}

TEST(Align, GoldColumnNeededWithoutCorpus) {
  const std::vector<PredictionRow> rows{{"a", std::nullopt, Label::ai, 0.5}};
  EXPECT_THROW(labels_from_predictions(rows), DataError);
}

}  // namespace
}  // namespace revdetect

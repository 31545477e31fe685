#include <gtest/gtest.h>

#include <unistd.h>

#include <fstream>

#include "revdetect/corpus.hpp"
#include "revdetect/eval.hpp"
#include "revdetect/predictions.hpp"
#include "support/cli_runner.hpp"
#include "support/synthetic.hpp"

namespace revdetect {
namespace {

using testing::run_cli;
using testing::slurp;

const std::vector<std::string> kFast{"--max-features", "300", "--w2v-dim", "16", "--w2v-epochs",
                                     "3", "--trees", "15", "--gb-rounds", "15", "--threads", "2"};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    write_corpus(dir_ / "train.csv", testing::synthetic_corpus({.per_class = 40}));
    write_corpus(dir_ / "test.csv", testing::synthetic_corpus({.per_class = 10, .seed = 5}));
  }

  static void write_corpus(const std::filesystem::path& p, LabeledCorpus c) {
    // test-set ids must not collide with training ids
    if (p.filename() == "test.csv")
      for (auto& r : c.reviews) r.id = "t" + r.id;
    std::ofstream out(p, std::ios::binary);
    write_reviews(out, c, {});
  }

  testing::CliResult run(std::vector<std::string> args) {
    return run_cli(REVDETECT_CLI, args, dir_.path());
  }

  testing::CliResult train(const std::string& model, const std::string& out) {
    std::vector<std::string> args{"train", "--train", (dir_ / "train.csv").string(), "--out",
                                  (dir_ / out).string(), "--model", model};
    args.insert(args.end(), kFast.begin(), kFast.end());
    return run(args);
  }

  testing::ScratchDir dir_{"revdetect_cli_test"};
};

TEST_F(CliTest, TrainPredictEvaluate) {
  const auto t = train("ensemble", "m");
  ASSERT_EQ(t.exit_code, 0) << t.err;
  for (const auto* f : {"model.bundle", "validation_report.txt", "validation_report.kv",
                        "validation_predictions.tsv", "validation_split.csv"})
    EXPECT_TRUE(std::filesystem::exists(dir_ / "m" / f)) << f;

  const auto p = run({"predict", "--bundle", (dir_ / "m" / "model.bundle").string(), "--input",
                      (dir_ / "test.csv").string(), "--output", (dir_ / "pred.tsv").string()});
  ASSERT_EQ(p.exit_code, 0) << p.err;
  EXPECT_EQ(load_predictions(dir_ / "pred.tsv").size(), 20u);

  const auto e = run({"evaluate", "--predictions", (dir_ / "pred.tsv").string(), "--gold",
                      (dir_ / "test.csv").string(), "--out", (dir_ / "eval").string()});
  ASSERT_EQ(e.exit_code, 0) << e.err;
  EXPECT_NE(e.out.find("macro avg"), std::string::npos);
  const auto report = report_from_kv(slurp(dir_ / "eval" / "report.kv"));
  EXPECT_EQ(report.samples(), 20u);

  // the validation predictions evaluate to the stored validation report
  const auto v = run({"evaluate", "--predictions",
                      (dir_ / "m" / "validation_predictions.tsv").string()});
  ASSERT_EQ(v.exit_code, 0) << v.err;
  EXPECT_EQ(v.out, slurp(dir_ / "m" / "validation_report.txt"));
}

TEST_F(CliTest, GridSearchWritesTable) {
  const auto t = train("svm-grid", "g");
  ASSERT_EQ(t.exit_code, 0) << t.err;
  const auto grid = slurp(dir_ / "g" / "grid_search.tsv");
  EXPECT_EQ(std::count(grid.begin(), grid.end(), '\n'), 33);
}

TEST_F(CliTest, ConfigFileSuppliesDefaultsAndFlagsWin) {
  std::ofstream(dir_ / "cfg.ini") << "[train]\nmodel=rf\ntrees=3\nw2v-dim=8\nmax-features=50\n";
  const auto t = run({"--config", (dir_ / "cfg.ini").string(), "train", "--train",
                      (dir_ / "train.csv").string(), "--out", (dir_ / "c").string(),
                      "--trees", "5"});
  ASSERT_EQ(t.exit_code, 0) << t.err;
  const auto b = slurp(dir_ / "c" / "model.bundle");
  EXPECT_NE(b.find("rf"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({}).exit_code, 1);
  EXPECT_EQ(run({"train"}).exit_code, 1);
  EXPECT_EQ(run({"train", "--train", "x", "--out", "y", "--model", "nope"}).exit_code, 1);
  EXPECT_EQ(run({"--help"}).exit_code, 0);
  EXPECT_EQ(run({"predict", "--bundle", (dir_ / "missing").string(), "--input",
                 (dir_ / "test.csv").string()})
                .exit_code,
            2);
  std::ofstream(dir_ / "junk.bundle") << "not a bundle at all, definitely not";
  const auto junk = run({"predict", "--bundle", (dir_ / "junk.bundle").string(), "--input",
                         (dir_ / "test.csv").string()});
  EXPECT_EQ(junk.exit_code, 2);
  EXPECT_NE(junk.err.find("bad magic"), std::string::npos) << junk.err;
  std::ofstream(dir_ / "bad.csv") << "id,text,label\na,x,BOT\n";
  EXPECT_EQ(run({"train", "--train", (dir_ / "bad.csv").string(), "--out",
                 (dir_ / "z").string()})
                .exit_code,
            2);
}

TEST_F(CliTest, AnalyzeCompareErrorsClean) {
  const auto a = run({"analyze", "--input", (dir_ / "train.csv").string(), "--out",
                      (dir_ / "an").string(), "--top", "5"});
  ASSERT_EQ(a.exit_code, 0) << a.err;
  EXPECT_NE(slurp(dir_ / "an" / "stats.kv").find("AI.avg_word_count="), std::string::npos);
  const auto top = slurp(dir_ / "an" / "top_words_AI.tsv");
  EXPECT_EQ(std::count(top.begin(), top.end(), '\n'), 6);

  // two hand-written prediction files in the interchange layout
  std::ofstream(dir_ / "p1.tsv") << "id\tgold\tpredicted\tp_ai\n";
  std::ofstream(dir_ / "p2.tsv") << "id\tgold\tpredicted\tp_ai\n";
  {
    const auto gold = load_reviews(dir_ / "test.csv", {});
    std::ofstream p1(dir_ / "p1.tsv", std::ios::app);
    std::ofstream p2(dir_ / "p2.tsv", std::ios::app);
    for (const auto& r : gold.reviews) {
      p1 << r.id << "\t\tAI\t0.9\n";
      p2 << r.id << "\t\tAI\t0.7\n";
    }
  }
  const auto c = run({"compare", "--gold", (dir_ / "test.csv").string(), "--predictions",
                      "first=" + (dir_ / "p1.tsv").string(), (dir_ / "p2.tsv").string()});
  ASSERT_EQ(c.exit_code, 0) << c.err;
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "id\tgold\tfirst\tp2\ttext");
  EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 11);  // the 10 HUMAN reviews

  const auto e = run({"errors", "--gold", (dir_ / "test.csv").string(), "--predictions",
                      (dir_ / "p1.tsv").string()});
  ASSERT_EQ(e.exit_code, 0) << e.err;
  EXPECT_EQ(std::count(e.out.begin(), e.out.end(), '\n'), 11);

  const auto cl = run({"clean", "--input", (dir_ / "test.csv").string()});
  ASSERT_EQ(cl.exit_code, 0) << cl.err;
  EXPECT_EQ(std::count(cl.out.begin(), cl.out.end(), '\n'), 20);
  EXPECT_EQ(cl.out.find('!'), std::string::npos);
}

TEST_F(CliTest, EvaluateWithoutGoldNeedsGoldColumn) {
  std::ofstream(dir_ / "p.tsv") << "id\tgold\tpredicted\tp_ai\na\t\tAI\t0.5\n";
  EXPECT_EQ(run({"evaluate", "--predictions", (dir_ / "p.tsv").string()}).exit_code, 2);
}

}  // namespace
}  // namespace revdetect

// Command-line front end: train, predict, evaluate, analyze, compare,
// errors, clean.
//
// Exit codes: 0 success, 1 usage/config error, 2 data error, 3 internal error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include <CLI/CLI.hpp>
#endif
#include "revdetect/revdetect.hpp"

namespace fs = std::filesystem;
using namespace revdetect;

namespace {

struct SchemaFlags {
  std::string delimiter = ",";
  std::string id_column = "id";
  std::string text_column = "text";
  std::string label_column = "label";
  std::string language = "tamil";

  void add_to(CLI::App* app) {
    app->add_option("--delimiter", delimiter, "Field delimiter: ',' or 'tab'")
        ->capture_default_str();
    app->add_option("--id-col", id_column, "Id column name")->capture_default_str();
    app->add_option("--text-col", text_column, "Text column name")->capture_default_str();
    app->add_option("--label-col", label_column, "Label column name")->capture_default_str();
    app->add_option("--language", language, "tamil | malayalam")->capture_default_str();
  }

  CsvSchema schema(bool require_label, Split split) const {
    CsvSchema s;
    if (delimiter == "tab" || delimiter == "\\t") {
      s.delimiter = '\t';
    } else if (delimiter.size() == 1) {
      s.delimiter = delimiter[0];
    } else {
      throw UsageError("delimiter must be a single character or 'tab'");
    }
    s.id_column = id_column;
    s.text_column = text_column;
    s.label_column = label_column;
    const auto lang = parse_language(language);
    if (!lang) throw UsageError("unknown language '" + language + "'");
    s.language = *lang;
    s.require_label = require_label;
    s.split = split;
    return s;
  }
};

struct TrainFlags {
  std::string train_path;
  std::string out_dir;
  std::string model = "svm-grid";
  std::uint64_t seed = 42;
  double val_fraction = 0.2;
  std::size_t max_features = 5000;
  std::size_t ngram_max = 2;
  std::size_t w2v_dim = 100;
  std::size_t w2v_window = 5;
  std::size_t w2v_epochs = 10;
  std::size_t w2v_negative = 5;
  std::string std_mode = "population";
  bool keep_native_numerals = false;
  bool no_lowercase = false;
  std::string svm_kernel = "rbf";
  double svm_c = 1.0;
  std::string svm_gamma = "scale";
  std::size_t folds = 5;
  std::string cv_metric = "macro_f1";
  std::size_t trees = 100;
  std::size_t gb_rounds = 100;
  double gb_lr = 0.1;
  std::size_t gb_depth = 6;
  std::size_t threads = 0;
  SchemaFlags schema;
};

void add_train(CLI::App& app, TrainFlags& f) {
  auto* cmd = app.add_subcommand("train", "Fit features and a classifier, report validation scores");
  cmd->add_option("--train", f.train_path, "Labeled training file")->required();
  cmd->add_option("--out", f.out_dir, "Output directory")->required();
  cmd->add_option("--model", f.model, "svm | svm-grid | rf | gb | ensemble")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed for split, embeddings, folds and trees")
      ->capture_default_str();
  cmd->add_option("--val-fraction", f.val_fraction, "Held-out validation fraction")
      ->capture_default_str();
  cmd->add_option("--max-features", f.max_features, "TF-IDF vocabulary cap")->capture_default_str();
  cmd->add_option("--ngram-max", f.ngram_max, "Longest TF-IDF n-gram")->capture_default_str();
  cmd->add_option("--w2v-dim", f.w2v_dim, "Embedding dimension")->capture_default_str();
  cmd->add_option("--w2v-window", f.w2v_window, "Skip-gram window")->capture_default_str();
  cmd->add_option("--w2v-epochs", f.w2v_epochs, "Word2Vec epochs")->capture_default_str();
  cmd->add_option("--w2v-negative", f.w2v_negative, "Negative samples")->capture_default_str();
  cmd->add_option("--std", f.std_mode, "population | sample")->capture_default_str();
  cmd->add_flag("--keep-native-numerals", f.keep_native_numerals,
                "Keep non-ASCII digits and numerals when cleaning");
  cmd->add_flag("--no-lowercase", f.no_lowercase, "Do not lower-case Latin letters");
  cmd->add_option("--svm-kernel", f.svm_kernel, "Kernel for --model svm")->capture_default_str();
  cmd->add_option("--svm-c", f.svm_c, "C for --model svm")->capture_default_str();
  cmd->add_option("--svm-gamma", f.svm_gamma, "scale | auto | <value>")->capture_default_str();
  cmd->add_option("--folds", f.folds, "Grid-search folds")->capture_default_str();
  cmd->add_option("--cv-metric", f.cv_metric, "macro_f1 | accuracy")->capture_default_str();
  cmd->add_option("--trees", f.trees, "Random forest size")->capture_default_str();
  cmd->add_option("--gb-rounds", f.gb_rounds, "Boosting rounds")->capture_default_str();
  cmd->add_option("--gb-lr", f.gb_lr, "Boosting learning rate")->capture_default_str();
  cmd->add_option("--gb-depth", f.gb_depth, "Boosting tree depth")->capture_default_str();
  cmd->add_option("--threads", f.threads, "Worker threads (0 = all cores)")->capture_default_str();
  f.schema.add_to(cmd);
}

PipelineConfig make_config(const TrainFlags& f) {
  PipelineConfig cfg;
  const auto model = parse_model_kind(f.model);
  if (!model) throw UsageError("unknown model '" + f.model + "'");
  cfg.model = *model;
  const auto lang = parse_language(f.schema.language);
  if (!lang) throw UsageError("unknown language '" + f.schema.language + "'");
  cfg.language = *lang;
  cfg.seed = f.seed;
  cfg.validation_fraction = f.val_fraction;
  cfg.threads = f.threads;
  cfg.features.clean.strip_all_numerals = !f.keep_native_numerals;
  cfg.features.clean.lowercase_latin = !f.no_lowercase;
  cfg.features.tfidf.max_features = f.max_features;
  cfg.features.tfidf.ngram_max = f.ngram_max;
  cfg.features.word2vec.dim = f.w2v_dim;
  cfg.features.word2vec.window = f.w2v_window;
  cfg.features.word2vec.epochs = f.w2v_epochs;
  cfg.features.word2vec.negative = f.w2v_negative;
  if (f.std_mode == "population") {
    cfg.features.std_mode = StdMode::population;
  } else if (f.std_mode == "sample") {
    cfg.features.std_mode = StdMode::sample;
  } else {
    throw UsageError("--std must be population or sample");
  }
  const auto kernel = parse_kernel(f.svm_kernel);
  if (!kernel) throw UsageError("unknown kernel '" + f.svm_kernel + "'");
  cfg.svm.kernel = *kernel;
  cfg.svm.C = f.svm_c;
  const auto gamma = parse_gamma(f.svm_gamma);
  if (!gamma) throw UsageError("invalid gamma '" + f.svm_gamma + "'");
  cfg.svm.gamma = *gamma;
  cfg.folds = f.folds;
  if (f.cv_metric == "macro_f1") {
    cfg.cv_metric = CvMetric::macro_f1;
  } else if (f.cv_metric == "accuracy") {
    cfg.cv_metric = CvMetric::accuracy;
  } else {
    throw UsageError("--cv-metric must be macro_f1 or accuracy");
  }
  cfg.forest.n_trees = f.trees;
  cfg.boosting.n_rounds = f.gb_rounds;
  cfg.boosting.learning_rate = f.gb_lr;
  cfg.boosting.max_depth = f.gb_depth;
  return cfg;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create '" + dir.string() + "': " + ec.message());
}

void write_report_files(const fs::path& dir, const std::string& stem, const EvalReport& r) {
  write_text_file(dir / (stem + ".txt"), render_report(r));
  write_text_file(dir / (stem + ".kv"), report_to_kv(r));
}

int run_train(const TrainFlags& f) {
  const auto cfg = make_config(f);
  const auto schema = f.schema.schema(true, Split::train);
  const auto corpus = load_reviews(f.train_path, schema);
  const auto counts = class_distribution(corpus);
  std::cerr << "loaded " << corpus.size() << " reviews (AI " << counts[0] << ", HUMAN "
            << counts[1] << ")\n";

  const auto outcome = train_pipeline(corpus, cfg);
  const fs::path dir = f.out_dir;
  ensure_dir(dir);
  save_bundle(dir / "model.bundle", outcome.bundle);
  {
    std::ofstream out(dir / "validation_split.csv", std::ios::binary);
    write_reviews(out, outcome.validation, schema);
  }
  save_predictions(dir / "validation_predictions.tsv", outcome.validation_predictions);
  if (outcome.grid) {
    std::ostringstream g;
    g << "kernel\tC\tgamma\tmean_score";
    for (std::size_t k = 0; k < cfg.folds; ++k) g << "\tfold" << k + 1;
    g << '\n';
    for (const auto& p : outcome.grid->points) {
      g << kernel_name(p.params.kernel) << '\t' << detail::format_double(p.params.C) << '\t'
        << p.params.gamma.to_string() << '\t' << detail::format_double(p.mean_score);
      for (double s : p.fold_scores) g << '\t' << detail::format_double(s);
      g << '\n';
    }
    write_text_file(dir / "grid_search.tsv", g.str());
    std::cerr << "best grid point: " << outcome.grid->best().params.describe()
              << " (mean cv score " << outcome.grid->best().mean_score << ")\n";
  }
  if (outcome.validation_report) {
    write_report_files(dir, "validation_report", *outcome.validation_report);
    std::cout << render_report(*outcome.validation_report);
  } else {
    std::cerr << "validation split is empty; no report written\n";
  }
  return 0;
}

struct PredictFlags {
  std::string bundle;
  std::string input;
  std::string output;
  SchemaFlags schema;
};

int run_predict(const PredictFlags& f) {
  const auto bundle = load_bundle(f.bundle);
  const auto corpus = load_reviews(f.input, f.schema.schema(false, Split::test));
  const auto rows = predict_corpus(bundle, corpus);
  if (f.output.empty() || f.output == "-") {
    write_predictions(std::cout, rows);
  } else {
    save_predictions(f.output, rows);
  }
  return 0;
}

struct EvaluateFlags {
  std::string predictions;
  std::string gold;
  std::string out_dir;
  SchemaFlags schema;
};

int run_evaluate(const EvaluateFlags& f) {
  const auto preds = load_predictions(f.predictions);
  AlignedLabels aligned;
  if (!f.gold.empty()) {
    const auto gold = load_reviews(f.gold, f.schema.schema(true, Split::test));
    aligned = align_predictions(gold, preds);
  } else {
    aligned = labels_from_predictions(preds);
  }
  const auto report = evaluate(aligned.y_true, aligned.y_pred);
  if (!f.out_dir.empty()) {
    ensure_dir(f.out_dir);
    write_report_files(f.out_dir, "report", report);
  }
  std::cout << render_report(report);
  return 0;
}

struct AnalyzeFlags {
  std::string input;
  std::string out_dir;
  std::size_t top = 50;
  std::string tokens = "pipeline";
  SchemaFlags schema;
};

int run_analyze(const AnalyzeFlags& f) {
  const auto corpus = load_reviews(f.input, f.schema.schema(true, Split::train));
  StatsOptions opts;
  if (f.tokens == "raw") {
    opts.tokens = StatsTokens::raw_whitespace;
  } else if (f.tokens != "pipeline") {
    throw UsageError("--tokens must be pipeline or raw");
  }
  const auto stats = corpus_statistics(corpus, opts);
  const fs::path dir = f.out_dir;
  ensure_dir(dir);
  {
    std::ofstream out(dir / "stats.kv", std::ios::binary);
    write_stats(out, stats);
  }
  for (auto label : kAllLabels) {
    std::ofstream out(dir / ("top_words_" + std::string(label_name(label)) + ".tsv"),
                      std::ios::binary);
    write_frequencies(out, top_words(corpus, label, f.top, opts));
  }
  write_stats(std::cout, stats);
  return 0;
}

struct CompareFlags {
  std::string gold;
  std::vector<std::string> predictions;
  std::string output;
  SchemaFlags schema;
};

// "name=path" or a bare path named after its file stem.
NamedPredictions load_named(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq != std::string::npos) return {spec.substr(0, eq), load_predictions(spec.substr(eq + 1))};
  return {fs::path(spec).stem().string(), load_predictions(spec)};
}

int run_compare(const CompareFlags& f) {
  if (f.predictions.size() < 2) throw UsageError("compare needs at least two prediction files");
  const auto gold = load_reviews(f.gold, f.schema.schema(true, Split::test));
  std::vector<NamedPredictions> named;
  for (const auto& p : f.predictions) named.push_back(load_named(p));
  const auto table = cross_model_misclassifications(gold, named);
  if (f.output.empty() || f.output == "-") {
    write_misclassifications(std::cout, table);
  } else {
    std::ofstream out(f.output, std::ios::binary);
    if (!out) throw DataError("cannot write '" + f.output + "'");
    write_misclassifications(out, table);
  }
  return 0;
}

struct ErrorsFlags {
  std::string gold;
  std::string predictions;
  std::string output;
  SchemaFlags schema;
};

int run_errors(const ErrorsFlags& f) {
  const auto gold = load_reviews(f.gold, f.schema.schema(true, Split::test));
  const auto listing = error_listing(gold, load_predictions(f.predictions));
  if (f.output.empty() || f.output == "-") {
    write_error_listing(std::cout, listing);
  } else {
    std::ofstream out(f.output, std::ios::binary);
    if (!out) throw DataError("cannot write '" + f.output + "'");
    write_error_listing(out, listing);
  }
  return 0;
}

struct CleanFlags {
  std::string input;
  SchemaFlags schema;
};

int run_clean(const CleanFlags& f) {
  const auto corpus = load_reviews(f.input, f.schema.schema(false, Split::unlabeled));
  for (const auto& r : corpus.reviews) std::cout << clean_text(r.text).value() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detect AI-generated product reviews in Tamil and Malayalam"};
  app.set_config("--config", "", "TOML/INI file with option defaults; flags override it");
  app.require_subcommand(1);

  TrainFlags train;
  add_train(app, train);

  PredictFlags predict;
  auto* predict_cmd = app.add_subcommand("predict", "Write predictions for a review file");
  predict_cmd->add_option("--bundle", predict.bundle, "Model bundle")->required();
  predict_cmd->add_option("--input", predict.input, "Review file (labels optional)")->required();
  predict_cmd->add_option("--output", predict.output, "Predictions file (default stdout)");
  predict.schema.add_to(predict_cmd);

  EvaluateFlags evaluate_f;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Score a predictions file");
  evaluate_cmd->add_option("--predictions", evaluate_f.predictions, "Predictions file")->required();
  evaluate_cmd->add_option("--gold", evaluate_f.gold,
                           "Labeled review file (default: gold column of the predictions)");
  evaluate_cmd->add_option("--out", evaluate_f.out_dir, "Directory for report.txt and report.kv");
  evaluate_f.schema.add_to(evaluate_cmd);

  AnalyzeFlags analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Per-class corpus statistics and word counts");
  analyze_cmd->add_option("--input", analyze.input, "Labeled review file")->required();
  analyze_cmd->add_option("--out", analyze.out_dir, "Output directory")->required();
  analyze_cmd->add_option("--top", analyze.top, "Words per frequency table")->capture_default_str();
  analyze_cmd->add_option("--tokens", analyze.tokens, "pipeline | raw")->capture_default_str();
  analyze.schema.add_to(analyze_cmd);

  CompareFlags compare;
  auto* compare_cmd =
      app.add_subcommand("compare", "List reviews misclassified by more than one model");
  compare_cmd->add_option("--gold", compare.gold, "Labeled review file")->required();
  compare_cmd->add_option("--predictions", compare.predictions, "[name=]file, two or more")
      ->required();
  compare_cmd->add_option("--output", compare.output, "Output file (default stdout)");
  compare.schema.add_to(compare_cmd);

  ErrorsFlags errors;
  auto* errors_cmd = app.add_subcommand("errors", "List false positives and false negatives");
  errors_cmd->add_option("--gold", errors.gold, "Labeled review file")->required();
  errors_cmd->add_option("--predictions", errors.predictions, "Predictions file")->required();
  errors_cmd->add_option("--output", errors.output, "Output file (default stdout)");
  errors.schema.add_to(errors_cmd);

  CleanFlags clean;
  auto* clean_cmd = app.add_subcommand("clean", "Print the cleaned text of each review");
  clean_cmd->add_option("--input", clean.input, "Review file")->required();
  clean.schema.add_to(clean_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand("train")) return run_train(train);
    if (app.got_subcommand("predict")) return run_predict(predict);
    if (app.got_subcommand("evaluate")) return run_evaluate(evaluate_f);
    if (app.got_subcommand("analyze")) return run_analyze(analyze);
    if (app.got_subcommand("compare")) return run_compare(compare);
    if (app.got_subcommand("errors")) return run_errors(errors);
    if (app.got_subcommand("clean")) return run_clean(clean);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::internal);
  }
  return 1;
}

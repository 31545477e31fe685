#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "revdetect/bundle.hpp"
#include "revdetect/corpus.hpp"
#include "revdetect/cross_validation.hpp"
#include "revdetect/ensemble.hpp"
#include "revdetect/eval.hpp"
#include "revdetect/features.hpp"
#include "revdetect/predictions.hpp"

namespace revdetect {

enum class ModelKind { svm, svm_grid, rf, gb, ensemble };

inline std::string_view model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::svm: return "svm";
    case ModelKind::svm_grid: return "svm-grid";
    case ModelKind::rf: return "rf";
    case ModelKind::gb: return "gb";
    case ModelKind::ensemble: return "ensemble";
  }
  return "?";
}

inline std::optional<ModelKind> parse_model_kind(std::string_view s) {
  for (auto k : {ModelKind::svm, ModelKind::svm_grid, ModelKind::rf, ModelKind::gb,
                 ModelKind::ensemble})
    if (model_kind_name(k) == s) return k;
  return std::nullopt;
}

// Defaults: 5000 tf-idf features over unigrams and bigrams, 100-dimensional
// embeddings, 100 trees, 100 boosting rounds at learning rate 0.1, 5 folds,
// 80/20 split, seed 42.
struct PipelineConfig {
  Language language = Language::tamil;
  ModelKind model = ModelKind::svm_grid;
  FeatureOptions features;
  SvmParams svm;
  SvmGrid grid;
  std::size_t folds = 5;
  CvMetric cv_metric = CvMetric::macro_f1;
  ForestOptions forest;
  BoostingOptions boosting;
  double validation_fraction = 0.2;
  std::uint64_t seed = 42;
  std::size_t threads = 0;
};

struct TrainOutcome {
  ModelBundle bundle;
  LabeledCorpus train;
  LabeledCorpus validation;
  std::optional<EvalReport> validation_report;  // absent when validation is empty
  std::vector<PredictionRow> validation_predictions;
  std::optional<CvResult> grid;
};

inline Classifier train_classifier(const Matrix& x, const LabelVector& y,
                                   const PipelineConfig& cfg, std::optional<CvResult>* grid) {
  ForestOptions forest = cfg.forest;
  forest.seed = cfg.seed;
  forest.threads = cfg.threads;
  switch (cfg.model) {
    case ModelKind::svm:
      return train_svm(x, y, cfg.svm);
    case ModelKind::svm_grid: {
      GridSearchOptions go{cfg.folds, cfg.seed, cfg.cv_metric, cfg.threads};
      auto res = svm_grid_search(x, y, cfg.grid, go, cfg.svm);
      if (grid) *grid = std::move(res.cv);
      return std::move(res.model);
    }
    case ModelKind::rf:
      return train_random_forest(x, y, forest);
    case ModelKind::gb:
      return train_gradient_boosting(x, y, cfg.boosting);
    case ModelKind::ensemble: {
      VotingModel v;
      v.members.emplace_back(train_random_forest(x, y, forest));
      v.members.emplace_back(train_gradient_boosting(x, y, cfg.boosting));
      return v;
    }
  }
  throw Error(ErrorKind::internal, "unhandled model kind");
}

inline std::vector<PredictionRow> predict_corpus(const ModelBundle& bundle,
                                                 const LabeledCorpus& corpus) {
  std::vector<PredictionRow> rows;
  if (corpus.empty()) return rows;
  const Matrix x = bundle.features.transform(corpus);
  const auto proba = predict_proba(bundle.classifier, x);
  const auto labels = predict_labels(bundle.classifier, x);
  rows.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& r = corpus.reviews[i];
    rows.push_back({r.id, r.label, bundle.labels.decode(labels[i]),
                    proba[i][static_cast<std::size_t>(Label::ai)]});
  }
  return rows;
}

// Holds out a validation slice, fits features on the remainder only, trains
// the configured model and scores the slice.
inline TrainOutcome train_pipeline(const LabeledCorpus& corpus, const PipelineConfig& cfg) {
  if (!is_fully_labeled(corpus)) throw DataError("training corpus has unlabeled reviews");
  TrainOutcome out;
  auto split = split_train_validation(corpus, cfg.validation_fraction, cfg.seed);
  out.train = std::move(split.train);
  out.validation = std::move(split.validation);

  FeatureOptions fo = cfg.features;
  fo.word2vec.seed = cfg.seed;
  const auto docs = preprocess_corpus(out.train, fo.clean);
  auto fitted = fit_features(docs, fo);
  const auto [y, labels] = encode_labels(out.train);

  out.bundle.language = cfg.language;
  out.bundle.model_kind = std::string(model_kind_name(cfg.model));
  out.bundle.labels = labels;
  out.bundle.features = std::move(fitted.extractor);
  out.bundle.classifier = train_classifier(fitted.train_matrix, y, cfg, &out.grid);

  if (!out.validation.empty()) {
    out.validation_predictions = predict_corpus(out.bundle, out.validation);
    const auto aligned = labels_from_predictions(out.validation_predictions);
    out.validation_report = evaluate(aligned.y_true, aligned.y_pred);
  }
  return out;
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace revdetect

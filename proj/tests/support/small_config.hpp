#pragma once

#include "revdetect/pipeline.hpp"

namespace revdetect::testing {

// Full pipeline with smaller models so unit tests stay fast.
inline PipelineConfig small_config(ModelKind model) {
  PipelineConfig cfg;
  cfg.model = model;
  cfg.features.tfidf.max_features = 300;
  cfg.features.word2vec.dim = 16;
  cfg.features.word2vec.epochs = 3;
  cfg.forest.n_trees = 15;
  cfg.boosting.n_rounds = 15;
  cfg.grid.kernels = {Kernel::linear, Kernel::rbf};
  cfg.grid.C = {1.0, 10.0};
  cfg.folds = 3;
  cfg.threads = 2;
  return cfg;
}

}  // namespace revdetect::testing

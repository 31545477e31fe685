#pragma once

#include <span>
#include <vector>

#include "revdetect/matrix.hpp"
#include "revdetect/scaler.hpp"
#include "revdetect/textprep.hpp"
#include "revdetect/tfidf.hpp"
#include "revdetect/word2vec.hpp"

namespace revdetect {

// Column layout of a fused row: tf-idf block first, then the embedding.
struct FeatureLayout {
  std::size_t tfidf_dim = 0;
  std::size_t embedding_dim = 0;

  std::size_t total() const noexcept { return tfidf_dim + embedding_dim; }
};

inline std::vector<double> fuse_features(const SparseVector& tfidf,
                                         std::span<const double> embedding,
                                         const FeatureLayout& layout) {
  if (tfidf.dim != layout.tfidf_dim || embedding.size() != layout.embedding_dim)
    throw DataError("feature dimension mismatch: got " + std::to_string(tfidf.dim) + "+" +
                    std::to_string(embedding.size()) + ", expected " +
                    std::to_string(layout.tfidf_dim) + "+" +
                    std::to_string(layout.embedding_dim));
  std::vector<double> out(layout.total(), 0.0);
  for (const auto& [col, value] : tfidf.entries) out[col] = value;
  std::copy(embedding.begin(), embedding.end(), out.begin() + layout.tfidf_dim);
  return out;
}

struct FeatureOptions {
  CleanOptions clean;
  TfidfOptions tfidf;
  Word2VecOptions word2vec;
  StdMode std_mode = StdMode::population;
};

// Fitted text -> feature-row transform.
struct FeatureExtractor {
  CleanOptions clean;
  TfidfModel tfidf;
  Word2VecModel word2vec;
  Scaler scaler;

  FeatureLayout layout() const {
    return {tfidf.vocabulary_size(), word2vec.dim()};
  }

  // Fused, unscaled matrix.
  Matrix fuse(std::span<const TokenizedDoc> docs) const {
    const auto lay = layout();
    Matrix out(docs.size(), lay.total());
    for (std::size_t i = 0; i < docs.size(); ++i) {
      const auto row = fuse_features(tfidf.transform(docs[i]),
                                     embed_document(word2vec, docs[i]), lay);
      std::copy(row.begin(), row.end(), out.row(i).begin());
    }
    return out;
  }

  Matrix transform(std::span<const TokenizedDoc> docs) const {
    return scaler.apply(fuse(docs));
  }

  Matrix transform(const LabeledCorpus& corpus) const {
    const auto docs = preprocess_corpus(corpus, clean);
    return transform(docs);
  }
};

struct FittedFeatures {
  FeatureExtractor extractor;
  Matrix train_matrix;  // scaled rows of the fitting documents
};

// Fits tf-idf and word2vec on docs, fuses, then fits one scaler over the
// fused matrix.
inline FittedFeatures fit_features(std::span<const TokenizedDoc> docs,
                                   const FeatureOptions& options) {
  FittedFeatures out;
  out.extractor.clean = options.clean;
  out.extractor.tfidf = fit_tfidf(docs, options.tfidf);
  out.extractor.word2vec = train_word2vec(docs, options.word2vec);
  const Matrix fused = out.extractor.fuse(docs);
  out.extractor.scaler = fit_scaler(fused, options.std_mode);
  out.train_matrix = out.extractor.scaler.apply(fused);
  return out;
}

}  // namespace revdetect

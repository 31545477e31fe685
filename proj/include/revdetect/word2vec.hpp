#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "revdetect/detail/random.hpp"
#include "revdetect/error.hpp"
#include "revdetect/matrix.hpp"
#include "revdetect/textprep.hpp"

namespace revdetect {

struct Word2VecOptions {
  std::size_t dim = 100;
  std::size_t window = 5;
  std::size_t epochs = 10;
  std::size_t negative = 5;
  std::size_t min_count = 1;
  double alpha = 0.025;
  double min_alpha = 0.0001;
  std::uint64_t seed = 42;
};

class Word2VecModel {
 public:
  Word2VecModel() = default;

  Word2VecModel(std::vector<std::string> vocabulary, Matrix vectors,
                Word2VecOptions options)
      : vocabulary_(std::move(vocabulary)),
        vectors_(std::move(vectors)),
        options_(options) {
    if (vectors_.rows() != vocabulary_.size())
      throw FormatError("word2vec vocabulary and matrix row counts differ");
    if (vectors_.cols() != options_.dim)
      throw FormatError("word2vec matrix width differs from configured dimension");
    index_.reserve(vocabulary_.size());
    for (std::size_t i = 0; i < vocabulary_.size(); ++i) index_.emplace(vocabulary_[i], i);
  }

  std::size_t dim() const noexcept { return options_.dim; }
  std::size_t vocabulary_size() const noexcept { return vocabulary_.size(); }
  const std::vector<std::string>& vocabulary() const noexcept { return vocabulary_; }
  const Matrix& vectors() const noexcept { return vectors_; }
  const Word2VecOptions& options() const noexcept { return options_; }

  std::optional<std::span<const double>> vector(const std::string& token) const {
    const auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return vectors_.row(it->second);
  }

 private:
  std::vector<std::string> vocabulary_;
  Matrix vectors_;
  Word2VecOptions options_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Skip-gram with negative sampling, single-threaded so a fixed seed gives
// identical vectors. Follows the reference word2vec update: a randomly
// shrunk window per centre word, noise drawn from unigram^0.75, linearly
// decaying learning rate.
inline Word2VecModel train_word2vec(std::span<const TokenizedDoc> docs,
                                    const Word2VecOptions& options = {}) {
  if (options.dim == 0 || options.window == 0)
    throw UsageError("word2vec dim and window must be positive");

  std::unordered_map<std::string, std::size_t> counts;
  std::size_t total_tokens = 0;
  for (const auto& d : docs) {
    for (const auto& t : d.tokens) ++counts[t];
    total_tokens += d.tokens.size();
  }
  if (total_tokens == 0) throw DataError("cannot train word2vec on an empty corpus");

  std::vector<std::pair<std::string, std::size_t>> vocab;
  for (auto& [tok, c] : counts)
    if (c >= options.min_count) vocab.emplace_back(tok, c);
  if (vocab.empty()) throw DataError("word2vec vocabulary is empty after min_count");
  std::sort(vocab.begin(), vocab.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < vocab.size(); ++i)
    index.emplace(vocab[i].first, static_cast<std::uint32_t>(i));

  const std::size_t v = vocab.size();
  const std::size_t dim = options.dim;
  detail::Rng rng(options.seed);

  Matrix syn0(v, dim);
  for (double& x : syn0.values()) x = (rng.uniform() - 0.5) / static_cast<double>(dim);
  Matrix syn1(v, dim, 0.0);

  std::vector<double> noise_cdf(v);
  double acc = 0.0;
  for (std::size_t i = 0; i < v; ++i) {
    acc += std::pow(static_cast<double>(vocab[i].second), 0.75);
    noise_cdf[i] = acc;
  }
  auto draw_noise = [&]() -> std::uint32_t {
    const double u = rng.uniform() * acc;
    const auto it = std::upper_bound(noise_cdf.begin(), noise_cdf.end(), u);
    return static_cast<std::uint32_t>(
        std::min<std::size_t>(static_cast<std::size_t>(it - noise_cdf.begin()), v - 1));
  };

  std::vector<std::vector<std::uint32_t>> sentences;
  std::size_t train_words = 0;
  for (const auto& d : docs) {
    std::vector<std::uint32_t> s;
    for (const auto& t : d.tokens)
      if (const auto it = index.find(t); it != index.end()) s.push_back(it->second);
    train_words += s.size();
    if (!s.empty()) sentences.push_back(std::move(s));
  }

  const double total = static_cast<double>(train_words * options.epochs) + 1.0;
  std::size_t processed = 0;
  std::vector<double> grad(dim);

  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    for (const auto& sent : sentences) {
      for (std::size_t pos = 0; pos < sent.size(); ++pos, ++processed) {
        const double alpha = std::max(
            options.min_alpha,
            options.alpha * (1.0 - static_cast<double>(processed) / total));
        const std::size_t shrink = static_cast<std::size_t>(rng.index(options.window));
        const std::size_t reach = options.window - shrink;
        const std::size_t lo = pos >= reach ? pos - reach : 0;
        const std::size_t hi = std::min(sent.size() - 1, pos + reach);
        const std::uint32_t centre = sent[pos];
        for (std::size_t c = lo; c <= hi; ++c) {
          if (c == pos) continue;
          auto input = syn0.row(sent[c]);
          std::fill(grad.begin(), grad.end(), 0.0);
          for (std::size_t k = 0; k <= options.negative; ++k) {
            std::uint32_t target = centre;
            double label = 1.0;
            if (k > 0) {
              target = draw_noise();
              if (target == centre) continue;
              label = 0.0;
            }
            auto out = syn1.row(target);
            const double f = dot(input, out);
            const double g = (label - 1.0 / (1.0 + std::exp(-f))) * alpha;
            for (std::size_t j = 0; j < dim; ++j) grad[j] += g * out[j];
            for (std::size_t j = 0; j < dim; ++j) out[j] += g * input[j];
          }
          for (std::size_t j = 0; j < dim; ++j) input[j] += grad[j];
        }
      }
    }
  }

  std::vector<std::string> words;
  words.reserve(v);
  for (auto& [tok, c] : vocab) words.push_back(tok);
  return Word2VecModel(std::move(words), std::move(syn0), options);
}

// Mean of the vectors of known tokens; zero when none is known.
inline std::vector<double> embed_document(const Word2VecModel& model,
                                          const TokenizedDoc& doc) {
  std::vector<double> out(model.dim(), 0.0);
  std::size_t n = 0;
  for (const auto& t : doc.tokens) {
    if (const auto vec = model.vector(t)) {
      for (std::size_t j = 0; j < out.size(); ++j) out[j] += (*vec)[j];
      ++n;
    }
  }
  if (n > 0)
    for (double& x : out) x /= static_cast<double>(n);
  return out;
}

inline double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  const double na = std::sqrt(dot(a, a));
  const double nb = std::sqrt(dot(b, b));
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (na * nb);
}

}  // namespace revdetect

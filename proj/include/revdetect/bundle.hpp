#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

#include "revdetect/ensemble.hpp"
#include "revdetect/error.hpp"
#include "revdetect/features.hpp"

namespace revdetect {

struct BundleVersion {
  std::uint16_t major = 1;
  std::uint16_t minor = 0;
  std::uint16_t patch = 0;

  std::string to_string() const {
    return std::to_string(major) + "." + std::to_string(minor) + "." + std::to_string(patch);
  }
  friend bool operator==(const BundleVersion&, const BundleVersion&) = default;
};

inline constexpr BundleVersion kBundleVersion{1, 0, 0};
inline constexpr std::string_view kBundleMagic = "RVDTBNDL";

// Everything needed to turn raw review text into predictions.
struct ModelBundle {
  BundleVersion version = kBundleVersion;
  Language language = Language::tamil;
  std::string model_kind;
  LabelMap labels;
  FeatureExtractor features;
  Classifier classifier;
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Little-endian writer.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v) { put(v, 2); }
  void u32(std::uint32_t v) { put(v, 4); }
  void u64(std::uint64_t v) { put(v, 8); }
  void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void str(std::string_view s) {
    u64(s.size());
    buf_.append(s);
  }
  void raw(std::string_view s) { buf_.append(s); }
  void f64s(std::span<const double> v) {
    u64(v.size());
    for (double x : v) f64(x);
  }
  const std::string& bytes() const noexcept { return buf_; }

 private:
  void put(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  std::string buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(get(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(get(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str() {
    const auto n = length(1);
    std::string s(data_.substr(pos_, n));
    pos_ += n;
    return s;
  }
  std::string_view raw(std::size_t n) {
    need(n);
    const auto s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::vector<double> f64s() {
    std::vector<double> v(length(8));
    for (double& x : v) x = f64();
    return v;
  }
  // Element count whose payload (count * elem_size bytes) must fit.
  std::size_t length(std::size_t elem_size) {
    const std::uint64_t n = u64();
    if (n > (data_.size() - pos_) / elem_size) throw FormatError("bundle is truncated");
    return static_cast<std::size_t>(n);
  }
  bool done() const noexcept { return pos_ == data_.size(); }
  std::size_t remaining() const noexcept { return data_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (n > data_.size() - pos_) throw FormatError("bundle is truncated");
  }
  std::uint64_t get(int n) {
    need(static_cast<std::size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i)
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    pos_ += static_cast<std::size_t>(n);
    return v;
  }
  std::string_view data_;
  std::size_t pos_ = 0;
};

inline void write_matrix(ByteWriter& w, const Matrix& m) {
  w.u64(m.rows());
  w.u64(m.cols());
  for (double v : m.values()) w.f64(v);
}

inline Matrix read_matrix(ByteReader& r) {
  const std::uint64_t rows = r.u64();
  const std::uint64_t cols = r.u64();
  if (cols != 0 && rows > r.remaining() / 8 / cols) throw FormatError("bundle is truncated");
  Matrix m(rows, cols);
  for (double& v : m.values()) v = r.f64();
  return m;
}

inline void write_tree(ByteWriter& w, const DecisionTree& t) {
  w.u64(t.nodes.size());
  for (const auto& n : t.nodes) {
    w.i32(n.feature);
    w.f64(n.threshold);
    w.u32(n.left);
    w.u32(n.right);
    w.f64(n.value);
    for (double c : n.class_counts) w.f64(c);
  }
}

inline DecisionTree read_tree(ByteReader& r, std::size_t n_features) {
  DecisionTree t;
  t.nodes.resize(r.length(4 + 8 + 4 + 4 + 8 + 8 * kNumClasses));
  if (t.nodes.empty()) throw FormatError("bundle holds an empty tree");
  for (auto& n : t.nodes) {
    n.feature = r.i32();
    n.threshold = r.f64();
    n.left = r.u32();
    n.right = r.u32();
    n.value = r.f64();
    for (double& c : n.class_counts) c = r.f64();
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    if (n.is_leaf()) continue;
    if (static_cast<std::size_t>(n.feature) >= n_features || n.left <= i || n.right <= i ||
        n.left >= t.nodes.size() || n.right >= t.nodes.size())
      throw FormatError("bundle holds a malformed tree");
  }
  return t;
}

enum class ModelTag : std::uint8_t { svm = 0, forest = 1, boosting = 2, voting = 3 };

inline void write_member(ByteWriter& w, const SvmModel& m) {
  w.u8(static_cast<std::uint8_t>(ModelTag::svm));
  w.u8(static_cast<std::uint8_t>(m.params.kernel));
  w.f64(m.params.C);
  w.u8(static_cast<std::uint8_t>(m.params.gamma.mode));
  w.f64(m.params.gamma.value);
  w.i32(m.params.degree);
  w.f64(m.params.coef0);
  w.f64(m.params.tolerance);
  w.f64(m.gamma);
  write_matrix(w, m.support_vectors);
  w.f64s(m.alpha);
  for (int s : m.sv_sign) w.u8(s > 0 ? 1 : 0);
  w.f64(m.rho);
  w.f64(m.platt.a);
  w.f64(m.platt.b);
  w.u64(m.iterations);
  w.u8(m.converged ? 1 : 0);
}

inline void write_member(ByteWriter& w, const ForestModel& m) {
  w.u8(static_cast<std::uint8_t>(ModelTag::forest));
  w.u64(m.n_features);
  w.u64(m.seed);
  w.u64(m.trees.size());
  for (const auto& t : m.trees) write_tree(w, t);
}

inline void write_member(ByteWriter& w, const GbModel& m) {
  w.u8(static_cast<std::uint8_t>(ModelTag::boosting));
  w.u64(m.n_features);
  w.f64(m.f0);
  w.f64(m.prior);
  w.f64(m.learning_rate);
  w.u64(m.max_depth);
  w.u64(m.trees.size());
  for (const auto& t : m.trees) write_tree(w, t);
}

inline void write_member(ByteWriter& w, const VotingModel& m) {
  w.u8(static_cast<std::uint8_t>(ModelTag::voting));
  w.u64(m.members.size());
  for (const auto& member : m.members) std::visit([&](const auto& v) { write_member(w, v); }, member);
}

inline Classifier read_classifier(ByteReader& r, bool allow_voting = true) {
  const auto tag = static_cast<ModelTag>(r.u8());
  switch (tag) {
    case ModelTag::svm: {
      SvmModel m;
      const auto kernel = r.u8();
      if (kernel > static_cast<std::uint8_t>(Kernel::sigmoid))
        throw FormatError("bundle names an unknown kernel");
      m.params.kernel = static_cast<Kernel>(kernel);
      m.params.C = r.f64();
      const auto gmode = r.u8();
      if (gmode > static_cast<std::uint8_t>(GammaSpec::Mode::value))
        throw FormatError("bundle names an unknown gamma mode");
      m.params.gamma.mode = static_cast<GammaSpec::Mode>(gmode);
      m.params.gamma.value = r.f64();
      m.params.degree = r.i32();
      m.params.coef0 = r.f64();
      m.params.tolerance = r.f64();
      m.gamma = r.f64();
      m.support_vectors = read_matrix(r);
      m.alpha = r.f64s();
      if (m.alpha.size() != m.support_vectors.rows())
        throw FormatError("bundle SVM coefficient count mismatch");
      m.sv_sign.resize(m.alpha.size());
      for (int& s : m.sv_sign) s = r.u8() ? 1 : -1;
      m.rho = r.f64();
      m.platt.a = r.f64();
      m.platt.b = r.f64();
      m.iterations = r.u64();
      m.converged = r.u8() != 0;
      m.finalize();
      return m;
    }
    case ModelTag::forest: {
      ForestModel m;
      m.n_features = r.u64();
      m.seed = r.u64();
      const auto n = r.length(1);
      for (std::size_t t = 0; t < n; ++t) m.trees.push_back(read_tree(r, m.n_features));
      if (m.trees.empty()) throw FormatError("bundle forest has no trees");
      return m;
    }
    case ModelTag::boosting: {
      GbModel m;
      m.n_features = r.u64();
      m.f0 = r.f64();
      m.prior = r.f64();
      if (!(m.prior > 0.0 && m.prior < 1.0))
        throw FormatError("bundle boosting prior out of range");
      m.learning_rate = r.f64();
      m.max_depth = r.u64();
      const auto n = r.length(1);
      for (std::size_t t = 0; t < n; ++t) m.trees.push_back(read_tree(r, m.n_features));
      return m;
    }
    case ModelTag::voting: {
      if (!allow_voting) throw FormatError("bundle nests voting models");
      VotingModel m;
      const auto n = r.length(1);
      for (std::size_t i = 0; i < n; ++i) {
        auto member = read_classifier(r, false);
        std::visit(
            [&](auto&& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (!std::is_same_v<T, VotingModel>) m.members.emplace_back(std::move(v));
            },
            std::move(member));
      }
      return m;
    }
  }
  throw FormatError("bundle names an unknown model type");
}

inline void write_features(ByteWriter& w, const FeatureExtractor& f) {
  w.u8(f.clean.strip_all_numerals ? 1 : 0);
  w.u8(f.clean.lowercase_latin ? 1 : 0);

  const auto& t = f.tfidf;
  w.u64(t.options().max_features);
  w.u64(t.options().ngram_min);
  w.u64(t.options().ngram_max);
  w.u64(t.document_count());
  w.u64(t.vocabulary_size());
  for (const auto& term : t.terms()) w.str(term);
  for (double v : t.idf()) w.f64(v);

  const auto& wv = f.word2vec;
  const auto& o = wv.options();
  w.u64(o.dim);
  w.u64(o.window);
  w.u64(o.epochs);
  w.u64(o.negative);
  w.u64(o.min_count);
  w.f64(o.alpha);
  w.f64(o.min_alpha);
  w.u64(o.seed);
  w.u64(wv.vocabulary_size());
  for (const auto& tok : wv.vocabulary()) w.str(tok);
  write_matrix(w, wv.vectors());

  w.u8(static_cast<std::uint8_t>(f.scaler.mode()));
  w.f64s(f.scaler.mean());
  w.f64s(f.scaler.stddev());
}

inline FeatureExtractor read_features(ByteReader& r) {
  FeatureExtractor f;
  f.clean.strip_all_numerals = r.u8() != 0;
  f.clean.lowercase_latin = r.u8() != 0;

  TfidfOptions to;
  to.max_features = r.u64();
  to.ngram_min = r.u64();
  to.ngram_max = r.u64();
  const auto docs = r.u64();
  const auto v = r.length(8);
  std::vector<std::string> terms(v);
  for (auto& term : terms) term = r.str();
  std::vector<double> idf(v);
  for (double& x : idf) x = r.f64();
  f.tfidf = TfidfModel(std::move(terms), std::move(idf), to, docs);

  Word2VecOptions wo;
  wo.dim = r.u64();
  wo.window = r.u64();
  wo.epochs = r.u64();
  wo.negative = r.u64();
  wo.min_count = r.u64();
  wo.alpha = r.f64();
  wo.min_alpha = r.f64();
  wo.seed = r.u64();
  const auto nv = r.length(8);
  std::vector<std::string> vocab(nv);
  for (auto& tok : vocab) tok = r.str();
  f.word2vec = Word2VecModel(std::move(vocab), read_matrix(r), wo);

  const auto mode = r.u8();
  if (mode > 1) throw FormatError("bundle names an unknown scaling mode");
  auto mean = r.f64s();
  auto sd = r.f64s();
  f.scaler = Scaler(std::move(mean), std::move(sd), static_cast<StdMode>(mode));
  if (f.scaler.columns() != f.layout().total())
    throw FormatError("bundle scaler width does not match the feature layout");
  return f;
}

inline void section(ByteWriter& out, std::string_view tag, const ByteWriter& body) {
  out.raw(tag);
  out.str(body.bytes());
}

}  // namespace detail

// Layout: magic, version (3 x u16), section count, then (4-byte tag,
// u64 length, payload) per section, then an FNV-1a 64 checksum of all
// preceding bytes.
inline std::string serialize_bundle(const ModelBundle& b) {
  detail::ByteWriter meta;
  meta.u8(static_cast<std::uint8_t>(b.language));
  meta.str(b.model_kind);
  meta.u64(b.labels.size());
  for (std::size_t i = 0; i < b.labels.size(); ++i) meta.str(b.labels.name(static_cast<int>(i)));

  detail::ByteWriter feats;
  detail::write_features(feats, b.features);

  detail::ByteWriter model;
  std::visit([&](const auto& m) { detail::write_member(model, m); }, b.classifier);

  detail::ByteWriter out;
  out.raw(kBundleMagic);
  out.u16(b.version.major);
  out.u16(b.version.minor);
  out.u16(b.version.patch);
  out.u32(3);
  detail::section(out, "META", meta);
  detail::section(out, "FEAT", feats);
  detail::section(out, "MODL", model);
  const std::uint64_t sum = detail::fnv1a(out.bytes());
  out.u64(sum);
  return out.bytes();
}

inline ModelBundle deserialize_bundle(std::string_view data) {
  constexpr std::size_t kHeader = 8 + 6 + 4;
  if (data.size() < kHeader + 8) throw FormatError("bundle is truncated");
  if (data.substr(0, kBundleMagic.size()) != kBundleMagic)
    throw FormatError("not a model bundle (bad magic)");
  detail::ByteReader head(data.substr(kBundleMagic.size(), 6));
  ModelBundle b;
  b.version = {head.u16(), head.u16(), head.u16()};
  if (b.version.major != kBundleVersion.major)
    throw FormatError("bundle format version " + b.version.to_string() +
                      " is not supported; this build reads " +
                      std::to_string(kBundleVersion.major) + ".x");
  const auto body = data.substr(0, data.size() - 8);
  detail::ByteReader tail(data.substr(data.size() - 8));
  if (tail.u64() != detail::fnv1a(body)) throw FormatError("bundle checksum mismatch");

  detail::ByteReader r(body.substr(kBundleMagic.size() + 6));
  const auto sections = r.u32();
  bool have_meta = false, have_feat = false, have_model = false;
  for (std::uint32_t s = 0; s < sections; ++s) {
    const std::string tag(r.raw(4));
    const std::string payload = r.str();
    detail::ByteReader p(payload);
    if (tag == "META") {
      const auto lang = p.u8();
      if (lang > 1) throw FormatError("bundle names an unknown language");
      b.language = static_cast<Language>(lang);
      b.model_kind = p.str();
      const auto n = p.length(8);
      if (n != kNumClasses) throw FormatError("bundle label map has the wrong class count");
      for (std::size_t i = 0; i < n; ++i)
        if (p.str() != b.labels.name(static_cast<int>(i)))
          throw FormatError("bundle label map does not match AI/HUMAN");
      have_meta = true;
    } else if (tag == "FEAT") {
      b.features = detail::read_features(p);
      have_feat = true;
    } else if (tag == "MODL") {
      b.classifier = detail::read_classifier(p);
      have_model = true;
    } else {
      continue;  // unknown sections from newer minor versions are skipped
    }
    if (!p.done()) throw FormatError("bundle section " + tag + " has trailing bytes");
  }
  if (!r.done()) throw FormatError("bundle has trailing bytes");
  if (!have_meta || !have_feat || !have_model) throw FormatError("bundle is missing a section");
  if (n_features(b.classifier) != b.features.layout().total())
    throw FormatError("bundle classifier width does not match the feature layout");
  return b;
}

inline void save_bundle(const std::filesystem::path& path, const ModelBundle& b) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  const auto bytes = serialize_bundle(b);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

inline ModelBundle load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize_bundle(data);
}

}  // namespace revdetect

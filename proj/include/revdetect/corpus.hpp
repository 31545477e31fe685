#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "revdetect/detail/random.hpp"
#include "revdetect/error.hpp"

namespace revdetect {

enum class Label : int { ai = 0, human = 1 };

inline constexpr std::size_t kNumClasses = 2;
inline constexpr std::array<Label, kNumClasses> kAllLabels{Label::ai, Label::human};

inline std::string_view label_name(Label l) {
  return l == Label::ai ? "AI" : "HUMAN";
}

// Accepts the two class names case-insensitively, surrounding blanks ignored.
inline std::optional<Label> parse_label(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  std::string up(s);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (up == "AI") return Label::ai;
  if (up == "HUMAN") return Label::human;
  return std::nullopt;
}

enum class Language { tamil, malayalam };
enum class Split { train, test, unlabeled };

inline std::string_view language_name(Language l) {
  return l == Language::tamil ? "tamil" : "malayalam";
}

inline std::optional<Language> parse_language(std::string_view s) {
  if (s == "tamil" || s == "ta") return Language::tamil;
  if (s == "malayalam" || s == "ml") return Language::malayalam;
  return std::nullopt;
}

struct Review {
  std::string id;
  std::string text;
  std::optional<Label> label;

  friend bool operator==(const Review&, const Review&) = default;
};

struct LabeledCorpus {
  std::vector<Review> reviews;
  Language language = Language::tamil;
  Split split = Split::train;

  std::size_t size() const noexcept { return reviews.size(); }
  bool empty() const noexcept { return reviews.empty(); }
};

using LabelVector = std::vector<int>;

// Class name <-> index. Indices follow lexicographic order of the class
// names, so AI is 0 and HUMAN is 1.
class LabelMap {
 public:
  int encode(Label l) const noexcept { return static_cast<int>(l); }

  Label decode(int index) const {
    if (index < 0 || index >= static_cast<int>(kNumClasses))
      throw DataError("label index out of range: " + std::to_string(index));
    return static_cast<Label>(index);
  }

  std::size_t size() const noexcept { return kNumClasses; }
  std::string_view name(int index) const { return label_name(decode(index)); }
};

struct CsvSchema {
  char delimiter = ',';
  std::string id_column = "id";
  std::string text_column = "text";
  std::string label_column = "label";
  // When false a missing label column yields an unlabeled corpus.
  bool require_label = true;
  Language language = Language::tamil;
  Split split = Split::train;
};

namespace detail {

// RFC 4180 record reader: quoted fields may contain delimiters, doubled
// quotes and newlines. Tracks the physical line each record started on.
class CsvReader {
 public:
  CsvReader(std::istream& in, char delimiter) : in_(in), delim_(delimiter) {}

  bool next(std::vector<std::string>& fields) {
    fields.clear();
    record_line_ = line_ + 1;
    int c = in_.get();
    if (c == EOF) return false;
    std::string field;
    bool quoted = false;
    bool field_started_quoted = false;
    while (true) {
      if (c == EOF) {
        if (quoted) throw DataError("line " + std::to_string(record_line_) +
                                    ": unterminated quoted field");
        fields.push_back(std::move(field));
        ++line_;
        return true;
      }
      const char ch = static_cast<char>(c);
      if (quoted) {
        if (ch == '"') {
          if (in_.peek() == '"') {
            field.push_back('"');
            in_.get();
          } else {
            quoted = false;
          }
        } else {
          if (ch == '\n') ++line_;
          field.push_back(ch);
        }
      } else if (ch == '"' && field.empty() && !field_started_quoted) {
        quoted = true;
        field_started_quoted = true;
      } else if (ch == delim_) {
        fields.push_back(std::move(field));
        field.clear();
        field_started_quoted = false;
      } else if (ch == '\n' || ch == '\r') {
        if (ch == '\r' && in_.peek() == '\n') in_.get();
        fields.push_back(std::move(field));
        ++line_;
        return true;
      } else {
        field.push_back(ch);
      }
      c = in_.get();
    }
  }

  std::size_t record_line() const noexcept { return record_line_; }

 private:
  std::istream& in_;
  char delim_;
  std::size_t line_ = 0;
  std::size_t record_line_ = 0;
};

inline std::string strip_bom(std::string s) {
  if (s.size() >= 3 && s.compare(0, 3, "\xEF\xBB\xBF") == 0) s.erase(0, 3);
  return s;
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

// Reads a delimiter-separated review file with a header row. Rows keep
// file order. Errors name the 1-based line of the offending record.
inline LabeledCorpus read_reviews(std::istream& in, const CsvSchema& schema,
                                  const std::string& source = "<stream>") {
  detail::CsvReader reader(in, schema.delimiter);
  std::vector<std::string> fields;
  if (!reader.next(fields))
    throw DataError(source + ": missing header row");

  auto find_column = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto cell = detail::trim(i == 0 ? detail::strip_bom(fields[i]) : fields[i]);
      if (cell == name) return i;
    }
    return std::nullopt;
  };
  const auto id_col = find_column(schema.id_column);
  const auto text_col = find_column(schema.text_column);
  const auto label_col = find_column(schema.label_column);
  if (!id_col) throw DataError(source + ": missing column '" + schema.id_column + "'");
  if (!text_col)
    throw DataError(source + ": missing column '" + schema.text_column + "'");
  if (!label_col && schema.require_label)
    throw DataError(source + ": missing column '" + schema.label_column + "'");

  LabeledCorpus corpus;
  corpus.language = schema.language;
  corpus.split = label_col ? schema.split : Split::unlabeled;
  std::unordered_set<std::string> seen;
  const std::size_t needed =
      std::max({*id_col, *text_col, label_col.value_or(0)}) + 1;

  while (reader.next(fields)) {
    const auto where = source + ":" + std::to_string(reader.record_line()) + ": ";
    if (fields.size() == 1 && detail::trim(fields[0]).empty()) continue;  // blank line
    if (fields.size() < needed)
      throw DataError(where + "expected at least " + std::to_string(needed) +
                      " fields, got " + std::to_string(fields.size()));
    Review r;
    r.id = detail::trim(fields[*id_col]);
    r.text = std::move(fields[*text_col]);
    if (r.id.empty()) throw DataError(where + "empty id");
    if (detail::trim(r.text).empty()) throw DataError(where + "empty text for id '" + r.id + "'");
    if (!seen.insert(r.id).second) throw DataError(where + "duplicate id '" + r.id + "'");
    if (label_col) {
      const auto raw = detail::trim(fields[*label_col]);
      if (!raw.empty()) {
        r.label = parse_label(raw);
        if (!r.label) throw DataError(where + "unknown label '" + raw + "'");
      } else if (schema.require_label) {
        throw DataError(where + "missing label for id '" + r.id + "'");
      }
    }
    corpus.reviews.push_back(std::move(r));
  }
  return corpus;
}

inline LabeledCorpus load_reviews(const std::filesystem::path& path,
                                  const CsvSchema& schema = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_reviews(in, schema, path.string());
}

namespace detail {

inline std::string csv_field(std::string_view v, char delimiter) {
  if (v.find_first_of(std::string{delimiter, '"', '\n', '\r'}) == std::string_view::npos)
    return std::string(v);
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace detail

// Inverse of read_reviews for the schema's three columns.
inline void write_reviews(std::ostream& out, const LabeledCorpus& corpus,
                          const CsvSchema& schema = {}) {
  const char d = schema.delimiter;
  out << detail::csv_field(schema.id_column, d) << d << detail::csv_field(schema.text_column, d)
      << d << detail::csv_field(schema.label_column, d) << '\n';
  for (const auto& r : corpus.reviews)
    out << detail::csv_field(r.id, d) << d << detail::csv_field(r.text, d) << d
        << (r.label ? label_name(*r.label) : "") << '\n';
}

inline bool is_fully_labeled(const LabeledCorpus& corpus) {
  return std::all_of(corpus.reviews.begin(), corpus.reviews.end(),
                     [](const Review& r) { return r.label.has_value(); });
}

inline std::pair<LabelVector, LabelMap> encode_labels(const LabeledCorpus& corpus) {
  LabelMap map;
  LabelVector y;
  y.reserve(corpus.size());
  for (const auto& r : corpus.reviews) {
    if (!r.label) throw DataError("review '" + r.id + "' has no label");
    y.push_back(map.encode(*r.label));
  }
  return {std::move(y), map};
}

using ClassCounts = std::array<std::size_t, kNumClasses>;

inline ClassCounts class_distribution(const LabeledCorpus& corpus) {
  ClassCounts counts{};
  for (const auto& r : corpus.reviews) {
    if (!r.label) throw DataError("review '" + r.id + "' has no label");
    ++counts[static_cast<std::size_t>(*r.label)];
  }
  return counts;
}

// round-half-up of n * fraction
inline std::size_t validation_size(std::size_t n, double fraction) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) * fraction + 0.5));
}

struct TrainValidationSplit {
  LabeledCorpus train;
  LabeledCorpus validation;
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> validation_indices;
};

// Unstratified shuffle split. Both parts keep the input's relative order.
inline TrainValidationSplit split_train_validation(const LabeledCorpus& corpus,
                                                   double validation_fraction,
                                                   std::uint64_t seed) {
  if (!(validation_fraction >= 0.0) || validation_fraction >= 1.0)
    throw UsageError("validation fraction must be in [0, 1), got " +
                     std::to_string(validation_fraction));
  if (corpus.empty()) throw DataError("cannot split an empty corpus");

  std::vector<std::size_t> order(corpus.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  detail::Rng rng(seed);
  rng.shuffle(std::span(order));

  const std::size_t n_val = validation_size(corpus.size(), validation_fraction);
  TrainValidationSplit out;
  out.validation_indices.assign(order.begin(), order.begin() + n_val);
  out.train_indices.assign(order.begin() + n_val, order.end());
  std::sort(out.validation_indices.begin(), out.validation_indices.end());
  std::sort(out.train_indices.begin(), out.train_indices.end());

  for (auto* part : {&out.train, &out.validation}) {
    part->language = corpus.language;
    part->split = corpus.split;
  }
  for (auto i : out.train_indices) out.train.reviews.push_back(corpus.reviews[i]);
  for (auto i : out.validation_indices) out.validation.reviews.push_back(corpus.reviews[i]);
  return out;
}

}  // namespace revdetect

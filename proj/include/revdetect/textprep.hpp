#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "revdetect/corpus.hpp"
#include "revdetect/detail/unicode.hpp"

namespace revdetect {

struct CleanOptions {
  // Strip every numeric code point (Tamil and Malayalam digits and numerals
  // included). ASCII 0-9 are stripped regardless.
  bool strip_all_numerals = true;
  // Lower-case Latin letters. Tamil and Malayalam are caseless.
  bool lowercase_latin = true;
};

// Cleaned review text: no markup tags, punctuation, symbols or digits,
// single spaces between words, no leading or trailing space.
class CleanText {
 public:
  CleanText() = default;
  const std::string& value() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend bool operator==(const CleanText&, const CleanText&) = default;

 private:
  explicit CleanText(std::string v) : value_(std::move(v)) {}
  friend CleanText clean_text(std::string_view raw, const CleanOptions& opts);

  std::string value_;
};

struct TokenizedDoc {
  std::vector<std::string> tokens;
  std::string source_id;

  friend bool operator==(const TokenizedDoc&, const TokenizedDoc&) = default;
};

namespace detail {

// Replaces every `<...>` span with a space. An unmatched '<' is left for the
// punctuation pass.
inline std::string strip_markup(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] == '<') {
      const auto close = raw.find('>', i + 1);
      if (close != std::string_view::npos) {
        out.push_back(' ');
        i = close + 1;
        continue;
      }
    }
    out.push_back(raw[i++]);
  }
  return out;
}

}  // namespace detail

inline CleanText clean_text(std::string_view raw, const CleanOptions& opts = {}) {
  const std::string untagged = detail::strip_markup(raw);
  std::string out;
  out.reserve(untagged.size());
  bool pending_space = false;
  std::size_t pos = 0;
  while (pos < untagged.size()) {
    char32_t cp = detail::decode_utf8(untagged, pos);
    switch (detail::classify(cp)) {
      case detail::CharClass::punct_symbol:
      case detail::CharClass::control:
        continue;
      case detail::CharClass::number:
        if (opts.strip_all_numerals || (cp >= '0' && cp <= '9')) continue;
        break;
      case detail::CharClass::space:
        pending_space = !out.empty();
        continue;
      case detail::CharClass::other:
        break;
    }
    if (opts.lowercase_latin) cp = detail::latin_to_lower(cp);
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    detail::append_utf8(out, cp);
  }
  return CleanText(std::move(out));
}

inline TokenizedDoc tokenize(const CleanText& text, std::string source_id = {}) {
  TokenizedDoc doc;
  doc.source_id = std::move(source_id);
  const std::string& s = text.value();
  std::size_t start = 0;
  while (start < s.size()) {
    auto end = s.find(' ', start);
    if (end == std::string::npos) end = s.size();
    if (end > start) doc.tokens.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
  return doc;
}

// Whitespace tokenization of raw, uncleaned text.
inline std::vector<std::string> whitespace_tokens(std::string_view raw) {
  std::vector<std::string> out;
  std::string cur;
  std::size_t pos = 0;
  while (pos < raw.size()) {
    const std::size_t begin = pos;
    const char32_t cp = detail::decode_utf8(raw, pos);
    if (detail::is_space(cp)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.append(raw.substr(begin, pos - begin));
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline bool is_sentence_terminator(char32_t cp) {
  return cp == '.' || cp == '!' || cp == '?' || cp == '\n' || cp == 0x0964 ||
         cp == 0x0965;
}

// Splits raw text on sentence-final marks. Segments holding only whitespace
// are dropped; the rest are returned trimmed.
inline std::vector<std::string> split_sentences(std::string_view raw) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    std::size_t first = std::string::npos;
    std::size_t last = 0;
    std::size_t p = 0;
    while (p < cur.size()) {
      const std::size_t at = p;
      if (!detail::is_space(detail::decode_utf8(cur, p))) {
        if (first == std::string::npos) first = at;
        last = p;
      }
    }
    if (first != std::string::npos) out.push_back(cur.substr(first, last - first));
    cur.clear();
  };
  std::size_t pos = 0;
  while (pos < raw.size()) {
    const std::size_t begin = pos;
    const char32_t cp = detail::decode_utf8(raw, pos);
    if (is_sentence_terminator(cp)) {
      flush();
    } else {
      cur.append(raw.substr(begin, pos - begin));
    }
  }
  flush();
  return out;
}

inline std::vector<TokenizedDoc> preprocess_corpus(const LabeledCorpus& corpus,
                                                   const CleanOptions& opts = {}) {
  std::vector<TokenizedDoc> docs;
  docs.reserve(corpus.size());
  for (const auto& r : corpus.reviews) docs.push_back(tokenize(clean_text(r.text, opts), r.id));
  return docs;
}

}  // namespace revdetect

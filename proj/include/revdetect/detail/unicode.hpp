#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "revdetect/detail/unicode_tables.hpp"

namespace revdetect::detail {

enum class CharClass : std::uint8_t {
  other = 0,
  punct_symbol = 1,  // general categories P* and S*
  number = 2,        // general categories N*
  space = 3,         // White_Space property
  control = 4,       // Cc that is not whitespace
};

inline constexpr char32_t kReplacementChar = 0xFFFD;

inline CharClass classify(char32_t cp) {
  const auto it = std::upper_bound(
      kCharClassRanges.begin(), kCharClassRanges.end(), cp,
      [](char32_t v, const CodepointRange& r) { return v < r.lo; });
  if (it == kCharClassRanges.begin()) return CharClass::other;
  const auto& r = *(it - 1);
  return cp <= r.hi ? static_cast<CharClass>(r.cls) : CharClass::other;
}

inline char32_t latin_to_lower(char32_t cp) {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
  const auto it = std::lower_bound(
      kLatinLower.begin(), kLatinLower.end(), cp,
      [](const CaseMapping& m, char32_t v) { return m.upper < v; });
  return (it != kLatinLower.end() && it->upper == cp) ? it->lower : cp;
}

// Decodes one code point starting at text[pos] and advances pos. Malformed
// sequences decode to U+FFFD and consume a single byte.
inline char32_t decode_utf8(std::string_view text, std::size_t& pos) {
  const auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(text[i]);
  };
  const unsigned char lead = byte(pos);
  if (lead < 0x80) {
    ++pos;
    return lead;
  }
  int extra = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((lead & 0xE0) == 0xC0) {
    extra = 1, cp = lead & 0x1F, min = 0x80;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2, cp = lead & 0x0F, min = 0x800;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3, cp = lead & 0x07, min = 0x10000;
  } else {
    ++pos;
    return kReplacementChar;
  }
  if (pos + extra >= text.size()) {
    ++pos;
    return kReplacementChar;
  }
  for (int k = 1; k <= extra; ++k) {
    const unsigned char c = byte(pos + k);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return kReplacementChar;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    ++pos;
    return kReplacementChar;
  }
  pos += extra + 1;
  return cp;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline bool is_space(char32_t cp) { return classify(cp) == CharClass::space; }

}  // namespace revdetect::detail

#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>

#include "revdetect/corpus.hpp"
#include "revdetect/error.hpp"

namespace revdetect {

// cells[true class][predicted class]
struct ConfusionMatrix {
  std::array<std::array<std::size_t, kNumClasses>, kNumClasses> cells{};

  std::size_t operator()(std::size_t truth, std::size_t predicted) const {
    return cells[truth][predicted];
  }
  std::size_t total() const noexcept {
    std::size_t t = 0;
    for (const auto& row : cells)
      for (auto c : row) t += c;
    return t;
  }
  std::size_t correct() const noexcept {
    std::size_t t = 0;
    for (std::size_t k = 0; k < kNumClasses; ++k) t += cells[k][k];
    return t;
  }

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

inline ConfusionMatrix confusion_matrix(std::span<const int> y_true,
                                        std::span<const int> y_pred) {
  if (y_true.size() != y_pred.size())
    throw DataError("label vectors differ in length: " + std::to_string(y_true.size()) +
                    " vs " + std::to_string(y_pred.size()));
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const int t = y_true[i];
    const int p = y_pred[i];
    if (t < 0 || t >= static_cast<int>(kNumClasses) || p < 0 ||
        p >= static_cast<int>(kNumClasses))
      throw DataError("label out of range at position " + std::to_string(i));
    ++cm.cells[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
  }
  return cm;
}

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;

  friend bool operator==(const ClassMetrics&, const ClassMetrics&) = default;
};

struct EvalReport {
  std::array<ClassMetrics, kNumClasses> per_class{};
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  ConfusionMatrix confusion;

  std::size_t samples() const noexcept { return confusion.total(); }
  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// Undefined precision or recall (zero denominator) counts as 0. Macro
// scores are unweighted means over classes; macro-F1 averages per-class F1.
inline EvalReport evaluate(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw DataError("cannot evaluate an empty prediction set");
  EvalReport r;
  r.confusion = cm;
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    std::size_t predicted = 0;
    std::size_t actual = 0;
    for (std::size_t k = 0; k < kNumClasses; ++k) {
      predicted += cm.cells[k][c];
      actual += cm.cells[c][k];
    }
    const double tp = static_cast<double>(cm.cells[c][c]);
    auto& m = r.per_class[c];
    m.support = actual;
    m.precision = predicted > 0 ? tp / static_cast<double>(predicted) : 0.0;
    m.recall = actual > 0 ? tp / static_cast<double>(actual) : 0.0;
    m.f1 = m.precision + m.recall > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    r.macro_precision += m.precision;
    r.macro_recall += m.recall;
    r.macro_f1 += m.f1;
  }
  const double k = static_cast<double>(kNumClasses);
  r.macro_precision /= k;
  r.macro_recall /= k;
  r.macro_f1 /= k;
  r.accuracy = static_cast<double>(cm.correct()) / static_cast<double>(cm.total());
  return r;
}

inline EvalReport evaluate(std::span<const int> y_true, std::span<const int> y_pred) {
  return evaluate(confusion_matrix(y_true, y_pred));
}

inline double macro_f1(std::span<const int> y_true, std::span<const int> y_pred) {
  return evaluate(y_true, y_pred).macro_f1;
}

namespace detail {

inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline double parse_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw DataError("invalid number for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

inline std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw DataError("invalid count for " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

// Classification-report style table; numbers rounded to two decimals.
inline std::string render_report(const EvalReport& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << std::setw(12) << "" << std::setw(11) << "precision" << std::setw(10) << "recall"
      << std::setw(10) << "f1-score" << std::setw(10) << "support" << "\n\n";
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const auto& m = r.per_class[c];
    out << std::setw(12) << label_name(static_cast<Label>(c)) << std::setw(11) << m.precision
        << std::setw(10) << m.recall << std::setw(10) << m.f1 << std::setw(10) << m.support
        << '\n';
  }
  out << '\n';
  out << std::setw(12) << "macro avg" << std::setw(11) << r.macro_precision << std::setw(10)
      << r.macro_recall << std::setw(10) << r.macro_f1 << std::setw(10) << r.samples() << '\n';
  out << std::setw(12) << "accuracy" << std::setw(31) << r.accuracy << std::setw(10)
      << r.samples() << '\n';
  return out.str();
}

inline constexpr std::string_view kReportFormat = "revdetect-report/1";

// Flat key=value form with shortest round-trip number formatting.
inline std::string report_to_kv(const EvalReport& r) {
  std::ostringstream out;
  out << "format=" << kReportFormat << '\n';
  out << "samples=" << r.samples() << '\n';
  out << "accuracy=" << detail::format_double(r.accuracy) << '\n';
  out << "macro_precision=" << detail::format_double(r.macro_precision) << '\n';
  out << "macro_recall=" << detail::format_double(r.macro_recall) << '\n';
  out << "macro_f1=" << detail::format_double(r.macro_f1) << '\n';
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const auto name = label_name(static_cast<Label>(c));
    const auto& m = r.per_class[c];
    out << name << ".precision=" << detail::format_double(m.precision) << '\n';
    out << name << ".recall=" << detail::format_double(m.recall) << '\n';
    out << name << ".f1=" << detail::format_double(m.f1) << '\n';
    out << name << ".support=" << m.support << '\n';
  }
  for (std::size_t t = 0; t < kNumClasses; ++t)
    for (std::size_t p = 0; p < kNumClasses; ++p)
      out << "confusion." << label_name(static_cast<Label>(t)) << '.'
          << label_name(static_cast<Label>(p)) << '=' << r.confusion.cells[t][p] << '\n';
  return out.str();
}

inline std::map<std::string, std::string> parse_kv(std::string_view text) {
  std::map<std::string, std::string> kv;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw DataError("line " + std::to_string(lineno) + ": expected key=value");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

inline EvalReport report_from_kv(std::string_view text) {
  const auto kv = parse_kv(text);
  auto get = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw DataError("report is missing key '" + key + "'");
    return it->second;
  };
  if (get("format") != kReportFormat) throw DataError("unsupported report format");
  EvalReport r;
  r.accuracy = detail::parse_double(get("accuracy"), "accuracy");
  r.macro_precision = detail::parse_double(get("macro_precision"), "macro_precision");
  r.macro_recall = detail::parse_double(get("macro_recall"), "macro_recall");
  r.macro_f1 = detail::parse_double(get("macro_f1"), "macro_f1");
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const std::string name(label_name(static_cast<Label>(c)));
    auto& m = r.per_class[c];
    m.precision = detail::parse_double(get(name + ".precision"), "precision");
    m.recall = detail::parse_double(get(name + ".recall"), "recall");
    m.f1 = detail::parse_double(get(name + ".f1"), "f1");
    m.support = detail::parse_count(get(name + ".support"), "support");
  }
  for (std::size_t t = 0; t < kNumClasses; ++t)
    for (std::size_t p = 0; p < kNumClasses; ++p)
      r.confusion.cells[t][p] = detail::parse_count(
          get("confusion." + std::string(label_name(static_cast<Label>(t))) + "." +
              std::string(label_name(static_cast<Label>(p)))),
          "confusion");
  return r;
}

}  // namespace revdetect

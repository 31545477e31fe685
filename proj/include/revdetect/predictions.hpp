#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "revdetect/corpus.hpp"
#include "revdetect/eval.hpp"

namespace revdetect {

// One row of the predictions interchange file:
//   id <TAB> gold <TAB> predicted <TAB> p_ai
// gold is empty when unknown. Any producer writing this layout can be
// evaluated and compared.
struct PredictionRow {
  std::string id;
  std::optional<Label> gold;
  Label predicted = Label::ai;
  double p_ai = 0.0;

  friend bool operator==(const PredictionRow&, const PredictionRow&) = default;
};

inline constexpr std::string_view kPredictionsHeader = "id\tgold\tpredicted\tp_ai";

inline void write_predictions(std::ostream& out, std::span<const PredictionRow> rows) {
  out << kPredictionsHeader << '\n';
  for (const auto& r : rows) {
    if (r.id.find_first_of("\t\r\n") != std::string::npos)
      throw DataError("id '" + r.id + "' cannot be written: contains tab or newline");
    out << r.id << '\t' << (r.gold ? label_name(*r.gold) : "") << '\t'
        << label_name(r.predicted) << '\t' << detail::format_double(r.p_ai) << '\n';
  }
}

inline std::vector<PredictionRow> read_predictions(std::istream& in,
                                                   const std::string& source = "<stream>") {
  std::string line;
  if (!std::getline(in, line)) throw DataError(source + ": missing header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  if (line != kPredictionsHeader)
    throw DataError(source + ": expected header '" + std::string(kPredictionsHeader) + "'");

  std::vector<PredictionRow> rows;
  std::unordered_set<std::string> seen;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto where = source + ":" + std::to_string(lineno) + ": ";
    std::vector<std::string> f;
    std::size_t start = 0;
    while (true) {
      const auto tab = line.find('\t', start);
      f.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() != 4)
      throw DataError(where + "expected 4 tab-separated fields, got " + std::to_string(f.size()));
    PredictionRow r;
    r.id = f[0];
    if (r.id.empty()) throw DataError(where + "empty id");
    if (!seen.insert(r.id).second) throw DataError(where + "duplicate id '" + r.id + "'");
    if (!f[1].empty()) {
      r.gold = parse_label(f[1]);
      if (!r.gold) throw DataError(where + "unknown gold label '" + f[1] + "'");
    }
    const auto pred = parse_label(f[2]);
    if (!pred) throw DataError(where + "unknown predicted label '" + f[2] + "'");
    r.predicted = *pred;
    r.p_ai = detail::parse_double(f[3], "p_ai");
    if (!(r.p_ai >= 0.0 && r.p_ai <= 1.0))
      throw DataError(where + "p_ai outside [0, 1]: " + f[3]);
    rows.push_back(std::move(r));
  }
  return rows;
}

inline void save_predictions(const std::filesystem::path& path,
                             std::span<const PredictionRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  write_predictions(out, rows);
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

inline std::vector<PredictionRow> load_predictions(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return read_predictions(in, path.string());
}

struct AlignedLabels {
  LabelVector y_true;
  LabelVector y_pred;
};

// Pairs gold labels with predictions in gold order. Every gold id must be
// predicted exactly once and no prediction may name an unknown id.
inline AlignedLabels align_predictions(const LabeledCorpus& gold,
                                       std::span<const PredictionRow> predictions) {
  std::unordered_map<std::string, const PredictionRow*> by_id;
  for (const auto& p : predictions) by_id.emplace(p.id, &p);
  AlignedLabels out;
  for (const auto& r : gold.reviews) {
    if (!r.label) throw DataError("gold review '" + r.id + "' has no label");
    const auto it = by_id.find(r.id);
    if (it == by_id.end()) throw DataError("no prediction for id '" + r.id + "'");
    out.y_true.push_back(static_cast<int>(*r.label));
    out.y_pred.push_back(static_cast<int>(it->second->predicted));
  }
  if (by_id.size() != gold.size()) {
    std::unordered_set<std::string> gold_ids;
    for (const auto& r : gold.reviews) gold_ids.insert(r.id);
    for (const auto& p : predictions)
      if (!gold_ids.contains(p.id))
        throw DataError("prediction for unknown id '" + p.id + "'");
  }
  return out;
}

// Same, using the gold column carried by the predictions themselves.
inline AlignedLabels labels_from_predictions(std::span<const PredictionRow> predictions) {
  AlignedLabels out;
  for (const auto& p : predictions) {
    if (!p.gold) throw DataError("prediction for '" + p.id + "' carries no gold label");
    out.y_true.push_back(static_cast<int>(*p.gold));
    out.y_pred.push_back(static_cast<int>(p.predicted));
  }
  return out;
}

}  // namespace revdetect

#pragma once

#include <cmath>
#include <vector>

#include "revdetect/error.hpp"
#include "revdetect/matrix.hpp"

namespace revdetect {

enum class StdMode { population, sample };

// Per-column standardization. Columns whose values are all identical are
// flagged constant and map to zero.
class Scaler {
 public:
  Scaler() = default;
  Scaler(std::vector<double> mean, std::vector<double> stddev, StdMode mode)
      : mean_(std::move(mean)), std_(std::move(stddev)), mode_(mode) {
    if (mean_.size() != std_.size()) throw FormatError("scaler mean/std sizes differ");
  }

  std::size_t columns() const noexcept { return mean_.size(); }
  const std::vector<double>& mean() const noexcept { return mean_; }
  const std::vector<double>& stddev() const noexcept { return std_; }
  StdMode mode() const noexcept { return mode_; }
  bool is_constant(std::size_t col) const { return std_[col] == 0.0; }

  Matrix apply(const Matrix& x) const {
    if (x.cols() != columns())
      throw DataError("scaler expects " + std::to_string(columns()) + " columns, got " +
                      std::to_string(x.cols()));
    Matrix out(x.rows(), x.cols());
    for (std::size_t r = 0; r < x.rows(); ++r) {
      const auto src = x.row(r);
      auto dst = out.row(r);
      for (std::size_t c = 0; c < src.size(); ++c)
        dst[c] = std_[c] == 0.0 ? 0.0 : (src[c] - mean_[c]) / std_[c];
    }
    return out;
  }

 private:
  std::vector<double> mean_;
  std::vector<double> std_;
  StdMode mode_ = StdMode::population;
};

inline Scaler fit_scaler(const Matrix& x, StdMode mode = StdMode::population) {
  if (x.rows() == 0) throw DataError("cannot fit a scaler on an empty matrix");
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  std::vector<double> mean(d, 0.0);
  std::vector<double> lo(x.row(0).begin(), x.row(0).end());
  std::vector<double> hi = lo;
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = x.row(r);
    for (std::size_t c = 0; c < d; ++c) {
      mean[c] += row[c];
      lo[c] = std::min(lo[c], row[c]);
      hi[c] = std::max(hi[c], row[c]);
    }
  }
  for (double& m : mean) m /= static_cast<double>(n);
  std::vector<double> var(d, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = x.row(r);
    for (std::size_t c = 0; c < d; ++c) {
      const double dev = row[c] - mean[c];
      var[c] += dev * dev;
    }
  }
  const double denom = mode == StdMode::sample ? static_cast<double>(n) - 1.0
                                               : static_cast<double>(n);
  std::vector<double> sd(d, 0.0);
  for (std::size_t c = 0; c < d; ++c) {
    if (lo[c] == hi[c] || denom <= 0.0) {
      mean[c] = lo[c];
      continue;
    }
    sd[c] = std::sqrt(var[c] / denom);
  }
  return Scaler(std::move(mean), std::move(sd), mode);
}

inline Matrix apply_scaler(const Scaler& s, const Matrix& x) { return s.apply(x); }

}  // namespace revdetect

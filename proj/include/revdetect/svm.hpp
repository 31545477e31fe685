#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "revdetect/corpus.hpp"
#include "revdetect/error.hpp"
#include "revdetect/matrix.hpp"

namespace revdetect {

using ClassProbs = std::array<double, kNumClasses>;

// Lowest index wins ties.
inline int argmax(const ClassProbs& p) noexcept { return p[1] > p[0] ? 1 : 0; }

enum class Kernel { linear, rbf, poly, sigmoid };

inline std::string_view kernel_name(Kernel k) {
  switch (k) {
    case Kernel::linear: return "linear";
    case Kernel::rbf: return "rbf";
    case Kernel::poly: return "poly";
    case Kernel::sigmoid: return "sigmoid";
  }
  return "?";
}

inline std::optional<Kernel> parse_kernel(std::string_view s) {
  for (auto k : {Kernel::linear, Kernel::rbf, Kernel::poly, Kernel::sigmoid})
    if (kernel_name(k) == s) return k;
  return std::nullopt;
}

struct GammaSpec {
  enum class Mode { scale, automatic, value };
  Mode mode = Mode::scale;
  double value = 0.0;

  static GammaSpec scale() { return {Mode::scale, 0.0}; }
  static GammaSpec automatic() { return {Mode::automatic, 0.0}; }
  static GammaSpec fixed(double g) { return {Mode::value, g}; }

  std::string to_string() const {
    switch (mode) {
      case Mode::scale: return "scale";
      case Mode::automatic: return "auto";
      case Mode::value: return std::to_string(value);
    }
    return "?";
  }
  friend bool operator==(const GammaSpec&, const GammaSpec&) = default;
};

inline std::optional<GammaSpec> parse_gamma(std::string_view s) {
  if (s == "scale") return GammaSpec::scale();
  if (s == "auto") return GammaSpec::automatic();
  try {
    const double g = std::stod(std::string(s));
    if (g > 0.0 && std::isfinite(g)) return GammaSpec::fixed(g);
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

struct SvmParams {
  Kernel kernel = Kernel::rbf;
  double C = 1.0;
  GammaSpec gamma = GammaSpec::scale();
  int degree = 3;
  double coef0 = 0.0;
  double tolerance = 1e-3;
  std::size_t max_iterations = 1'000'000;
  std::size_t cache_rows = 4096;

  std::string describe() const {
    return "kernel=" + std::string(kernel_name(kernel)) + " C=" + std::to_string(C) +
           " gamma=" + gamma.to_string();
  }
};

// Variance over every entry of the selected rows (all rows when empty).
inline double matrix_variance(const Matrix& x, std::span<const std::size_t> rows = {}) {
  const std::size_t n = rows.empty() ? x.rows() : rows.size();
  const double count = static_cast<double>(n) * static_cast<double>(x.cols());
  if (count == 0.0) return 0.0;
  auto row_at = [&](std::size_t i) { return x.row(rows.empty() ? i : rows[i]); };
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (double v : row_at(i)) sum += v;
  const double mean = sum / count;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (double v : row_at(i)) ss += (v - mean) * (v - mean);
  return ss / count;
}

// gamma=scale -> 1 / (n_features * var(X)), falling back to 1 for
// constant X; gamma=auto -> 1 / n_features.
inline double resolve_gamma(const GammaSpec& g, std::size_t n_features, double variance) {
  switch (g.mode) {
    case GammaSpec::Mode::scale:
      return variance > 0.0 ? 1.0 / (static_cast<double>(n_features) * variance) : 1.0;
    case GammaSpec::Mode::automatic:
      return 1.0 / static_cast<double>(n_features);
    case GammaSpec::Mode::value:
      return g.value;
  }
  return 1.0;
}

// Kernel value from the dot product and the two squared norms.
struct KernelFunction {
  Kernel kernel = Kernel::rbf;
  double gamma = 1.0;
  int degree = 3;
  double coef0 = 0.0;

  double operator()(double xz, double xx, double zz) const {
    switch (kernel) {
      case Kernel::linear:
        return xz;
      case Kernel::rbf:
        return std::exp(-gamma * std::max(0.0, xx + zz - 2.0 * xz));
      case Kernel::poly:
        return std::pow(gamma * xz + coef0, degree);
      case Kernel::sigmoid:
        return std::tanh(gamma * xz + coef0);
    }
    return 0.0;
  }
};

namespace detail {

// Kernel rows K(i, .) over the training set, computed on demand and kept in
// a least-recently-used cache.
class KernelRowCache {
 public:
  using RowFn = std::function<void(std::size_t, std::span<double>)>;

  KernelRowCache(std::size_t n, std::size_t capacity, RowFn fn)
      : n_(n), capacity_(std::max<std::size_t>(2, capacity)), fn_(std::move(fn)) {}

  std::span<const double> row(std::size_t i) {
    if (auto it = slots_.find(i); it != slots_.end()) {
      lru_.splice(lru_.begin(), lru_, it->second.pos);
      return it->second.data;
    }
    std::vector<double> data(n_);
    if (slots_.size() >= capacity_) {
      const std::size_t victim = lru_.back();
      lru_.pop_back();
      data = std::move(slots_[victim].data);
      slots_.erase(victim);
    }
    fn_(i, data);
    lru_.push_front(i);
    auto& slot = slots_[i];
    slot.data = std::move(data);
    slot.pos = lru_.begin();
    return slot.data;
  }

 private:
  struct Slot {
    std::vector<double> data;
    std::list<std::size_t>::iterator pos;
  };
  std::size_t n_;
  std::size_t capacity_;
  RowFn fn_;
  std::list<std::size_t> lru_;
  std::unordered_map<std::size_t, Slot> slots_;
};

struct SmoResult {
  std::vector<double> alpha;
  double rho = 0.0;  // decision(x) = sum_i alpha_i y_i K(x_i, x) - rho
  std::size_t iterations = 0;
  bool converged = false;
};

// Soft-margin dual:  min 1/2 a'Qa - e'a  s.t.  y'a = 0, 0 <= a <= C,
// Q_ij = y_i y_j K_ij. Working pair = maximal KKT violating pair; stops
// when the violation gap drops below tol.
inline SmoResult solve_smo(std::span<const int> sign, double C,
                           std::span<const double> kernel_diag, KernelRowCache& cache,
                           double tol, std::size_t max_iterations) {
  constexpr double kTau = 1e-12;
  const std::size_t n = sign.size();
  SmoResult res;
  res.alpha.assign(n, 0.0);
  std::vector<double> grad(n, -1.0);
  auto& a = res.alpha;
  auto is_upper = [&](std::size_t t) { return a[t] >= C; };
  auto is_lower = [&](std::size_t t) { return a[t] <= 0.0; };

  while (res.iterations < max_iterations) {
    double gmax = -std::numeric_limits<double>::infinity();
    double gmin = std::numeric_limits<double>::infinity();
    std::size_t i = n;
    std::size_t j = n;
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -sign[t] * grad[t];
      const bool up = sign[t] > 0 ? !is_upper(t) : !is_lower(t);
      const bool low = sign[t] > 0 ? !is_lower(t) : !is_upper(t);
      if (up && v > gmax) {
        gmax = v;
        i = t;
      }
      if (low && v < gmin) {
        gmin = v;
        j = t;
      }
    }
    if (i == n || j == n || gmax - gmin < tol) {
      res.converged = true;
      break;
    }
    ++res.iterations;

    const auto ki = cache.row(i);
    const double kij = ki[j];
    const auto kj = cache.row(j);
    const double old_ai = a[i];
    const double old_aj = a[j];
    const double yi = sign[i];
    const double yj = sign[j];
    if (sign[i] != sign[j]) {
      double quad = kernel_diag[i] + kernel_diag[j] - 2.0 * kij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = a[i] - a[j];
      a[i] += delta;
      a[j] += delta;
      if (diff > 0.0) {
        if (a[j] < 0.0) {
          a[j] = 0.0;
          a[i] = diff;
        }
      } else if (a[i] < 0.0) {
        a[i] = 0.0;
        a[j] = -diff;
      }
      if (diff > 0.0) {
        if (a[i] > C) {
          a[i] = C;
          a[j] = C - diff;
        }
      } else if (a[j] > C) {
        a[j] = C;
        a[i] = C + diff;
      }
    } else {
      double quad = kernel_diag[i] + kernel_diag[j] - 2.0 * kij;
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = a[i] + a[j];
      a[i] -= delta;
      a[j] += delta;
      if (sum > C) {
        if (a[i] > C) {
          a[i] = C;
          a[j] = sum - C;
        }
      } else if (a[j] < 0.0) {
        a[j] = 0.0;
        a[i] = sum;
      }
      if (sum > C) {
        if (a[j] > C) {
          a[j] = C;
          a[i] = sum - C;
        }
      } else if (a[i] < 0.0) {
        a[i] = 0.0;
        a[j] = sum;
      }
    }
    const double dai = a[i] - old_ai;
    const double daj = a[j] - old_aj;
    for (std::size_t t = 0; t < n; ++t)
      grad[t] += sign[t] * (yi * ki[t] * dai + yj * kj[t] * daj);
  }

  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double sum_free = 0.0;
  std::size_t n_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = sign[t] * grad[t];
    if (is_upper(t)) {
      if (sign[t] < 0) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else if (is_lower(t)) {
      if (sign[t] > 0) ub = std::min(ub, yg);
      else lb = std::max(lb, yg);
    } else {
      ++n_free;
      sum_free += yg;
    }
  }
  res.rho = n_free > 0 ? sum_free / static_cast<double>(n_free) : (ub + lb) / 2.0;
  return res;
}

struct PlattCoefficients {
  double a = 0.0;
  double b = 0.0;
};

// Platt's sigmoid fit P(y=+1 | f) = 1 / (1 + exp(a f + b)), Newton method
// with backtracking and regularized targets.
inline PlattCoefficients fit_platt(std::span<const double> decision, std::span<const int> sign) {
  const std::size_t n = decision.size();
  double prior1 = 0.0;
  double prior0 = 0.0;
  for (int s : sign) (s > 0 ? prior1 : prior0) += 1.0;
  const double hi = (prior1 + 1.0) / (prior1 + 2.0);
  const double lo = 1.0 / (prior0 + 2.0);
  std::vector<double> target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = sign[i] > 0 ? hi : lo;

  constexpr int kMaxIter = 100;
  constexpr double kMinStep = 1e-10;
  constexpr double kSigma = 1e-12;
  constexpr double kEps = 1e-5;

  double a = 0.0;
  double b = std::log((prior0 + 1.0) / (prior1 + 1.0));
  auto objective = [&](double aa, double bb) {
    double f = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double fApB = decision[i] * aa + bb;
      f += fApB >= 0 ? target[i] * fApB + std::log1p(std::exp(-fApB))
                     : (target[i] - 1.0) * fApB + std::log1p(std::exp(fApB));
    }
    return f;
  };
  double fval = objective(a, b);
  for (int iter = 0; iter < kMaxIter; ++iter) {
    double h11 = kSigma, h22 = kSigma, h21 = 0.0, g1 = 0.0, g2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double fApB = decision[i] * a + b;
      double p, q;
      if (fApB >= 0) {
        p = std::exp(-fApB) / (1.0 + std::exp(-fApB));
        q = 1.0 / (1.0 + std::exp(-fApB));
      } else {
        p = 1.0 / (1.0 + std::exp(fApB));
        q = std::exp(fApB) / (1.0 + std::exp(fApB));
      }
      const double d2 = p * q;
      h11 += decision[i] * decision[i] * d2;
      h22 += d2;
      h21 += decision[i] * d2;
      const double d1 = target[i] - p;
      g1 += decision[i] * d1;
      g2 += d1;
    }
    if (std::fabs(g1) < kEps && std::fabs(g2) < kEps) break;
    const double det = h11 * h22 - h21 * h21;
    const double da = -(h22 * g1 - h21 * g2) / det;
    const double db = -(-h21 * g1 + h11 * g2) / det;
    const double gd = g1 * da + g2 * db;
    double step = 1.0;
    while (step >= kMinStep) {
      const double na = a + step * da;
      const double nb = b + step * db;
      const double nf = objective(na, nb);
      if (nf < fval + 0.0001 * step * gd) {
        a = na;
        b = nb;
        fval = nf;
        break;
      }
      step /= 2.0;
    }
    if (step < kMinStep) break;
  }
  return {a, b};
}

inline double platt_probability(const PlattCoefficients& c, double decision) {
  const double fApB = decision * c.a + c.b;
  return fApB >= 0 ? std::exp(-fApB) / (1.0 + std::exp(-fApB)) : 1.0 / (1.0 + std::exp(fApB));
}

inline int class_sign(int label) { return label == 1 ? 1 : -1; }

inline void check_binary_labels(std::span<const int> y, std::size_t rows) {
  if (y.size() != rows)
    throw DataError("feature rows (" + std::to_string(rows) + ") and labels (" +
                    std::to_string(y.size()) + ") differ");
  for (int v : y)
    if (v != 0 && v != 1) throw DataError("labels must be 0 or 1");
}

inline void check_finite(const Matrix& x) {
  for (double v : x.values())
    if (!std::isfinite(v)) throw DataError("feature matrix contains non-finite values");
}

}  // namespace detail

// Binary SVM. Class 1 is the positive side of the decision function.
class SvmModel {
 public:
  SvmModel() = default;

  SvmParams params;
  double gamma = 1.0;
  Matrix support_vectors;
  std::vector<double> alpha;      // 0 <= alpha <= C
  std::vector<int> sv_sign;       // +1 for class 1, -1 for class 0
  double rho = 0.0;
  detail::PlattCoefficients platt;
  std::size_t iterations = 0;
  bool converged = false;

  std::size_t n_features() const noexcept { return support_vectors.cols(); }
  std::size_t n_support() const noexcept { return support_vectors.rows(); }

  KernelFunction kernel() const {
    return {params.kernel, gamma, params.degree, params.coef0};
  }

  double decision(std::span<const double> x) const {
    const auto k = kernel();
    const double xx = dot(x, x);
    double f = -rho;
    for (std::size_t s = 0; s < n_support(); ++s) {
      const auto sv = support_vectors.row(s);
      f += alpha[s] * sv_sign[s] * k(dot(sv, x), sv_norm_[s], xx);
    }
    return f;
  }

  int predict(std::span<const double> x) const { return decision(x) > 0.0 ? 1 : 0; }

  ClassProbs proba(std::span<const double> x) const {
    const double p1 = detail::platt_probability(platt, decision(x));
    return {1.0 - p1, p1};
  }

  // Must be called after the public fields are filled in.
  void finalize() {
    sv_norm_.resize(n_support());
    for (std::size_t s = 0; s < n_support(); ++s)
      sv_norm_[s] = dot(support_vectors.row(s), support_vectors.row(s));
  }

 private:
  std::vector<double> sv_norm_;
};

inline SvmModel train_svm(const Matrix& x, std::span<const int> y, const SvmParams& params) {
  detail::check_binary_labels(y, x.rows());
  if (!(params.C > 0.0)) throw UsageError("SVM C must be positive");
  if (std::count(y.begin(), y.end(), 0) == 0 || std::count(y.begin(), y.end(), 1) == 0)
    throw DataError("SVM training needs both classes");
  detail::check_finite(x);

  const std::size_t n = x.rows();
  std::vector<double> norm(n);
  for (std::size_t i = 0; i < n; ++i) norm[i] = dot(x.row(i), x.row(i));
  SvmModel m;
  m.params = params;
  m.gamma = resolve_gamma(params.gamma, x.cols(), matrix_variance(x));
  const KernelFunction k = m.kernel();

  std::vector<int> sign(n);
  for (std::size_t i = 0; i < n; ++i) sign[i] = detail::class_sign(y[i]);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = k(norm[i], norm[i], norm[i]);
  detail::KernelRowCache cache(n, params.cache_rows, [&](std::size_t i, std::span<double> out) {
    const auto xi = x.row(i);
    for (std::size_t t = 0; t < n; ++t) out[t] = k(dot(xi, x.row(t)), norm[i], norm[t]);
  });
  const auto res = detail::solve_smo(sign, params.C, diag, cache, params.tolerance,
                                     params.max_iterations);

  std::vector<std::size_t> sv;
  for (std::size_t i = 0; i < n; ++i)
    if (res.alpha[i] > 0.0) sv.push_back(i);
  m.support_vectors = x.select_rows(sv);
  for (auto i : sv) {
    m.alpha.push_back(res.alpha[i]);
    m.sv_sign.push_back(sign[i]);
  }
  m.rho = res.rho;
  m.iterations = res.iterations;
  m.converged = res.converged;
  m.finalize();

  std::vector<double> decision(n);
  for (std::size_t i = 0; i < n; ++i) decision[i] = m.decision(x.row(i));
  m.platt = detail::fit_platt(decision, sign);
  return m;
}

}  // namespace revdetect

#include "uimpact/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

namespace uimpact::stats {

namespace {

constexpr double kRhoEps = 1e-12;

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) throw NonFiniteValueError("non-finite value in input");
  }
}

double centered_dot(std::span<const double> a, std::span<const double> b, double mean_a,
                    double mean_b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - mean_a) * (b[i] - mean_b);
  return acc;
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Pearson correlation of two rank vectors; the caller guarantees both have
// positive variance.
double pearson(std::span<const double> a, std::span<const double> b) {
  const double ma = mean_of(a);
  const double mb = mean_of(b);
  const double sab = centered_dot(a, b, ma, mb);
  const double saa = centered_dot(a, a, ma, ma);
  const double sbb = centered_dot(b, b, mb, mb);
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

// Shared machinery for both permutation branches: |rho| of x-ranks against
// a permutation of the y-ranks, recomputed per draw.
struct PermutationScorer {
  std::vector<double> dx;      // x ranks, centered
  std::vector<double> y_rank;  // y ranks (permuted in place by callers)
  double inv_norm = 0.0;       // 1/sqrt(Sxx*Syy)
  double mean_y = 0.0;

  PermutationScorer(std::span<const double> rx, std::span<const double> ry)
      : y_rank(ry.begin(), ry.end()) {
    const double mx = mean_of(rx);
    mean_y = mean_of(ry);
    dx.reserve(rx.size());
    double sxx = 0.0;
    for (double r : rx) {
      dx.push_back(r - mx);
      sxx += (r - mx) * (r - mx);
    }
    double syy = 0.0;
    for (double r : ry) syy += (r - mean_y) * (r - mean_y);
    inv_norm = 1.0 / std::sqrt(sxx * syy);
  }

  double abs_rho() const {
    double sxy = 0.0;
    for (std::size_t i = 0; i < dx.size(); ++i) sxy += dx[i] * (y_rank[i] - mean_y);
    return std::abs(sxy * inv_norm);
  }
};

double exact_permutation_p(std::span<const double> rx, std::span<const double> ry,
                           double abs_observed) {
  PermutationScorer scorer(rx, ry);
  std::sort(scorer.y_rank.begin(), scorer.y_rank.end());
  std::int64_t hits = 0;
  std::int64_t total = 0;
  do {
    ++total;
    if (scorer.abs_rho() >= abs_observed - kRhoEps) ++hits;
  } while (std::next_permutation(scorer.y_rank.begin(), scorer.y_rank.end()));
  // next_permutation over a sorted multiset enumerates distinct orderings;
  // with ties each distinct ordering stands for an equal number of the n!
  // raw orderings, so the ratio is unchanged.
  return static_cast<double>(hits) / static_cast<double>(total);
}

double monte_carlo_permutation_p(std::span<const double> rx, std::span<const double> ry,
                                 double abs_observed, std::uint64_t seed, int draws) {
  // canonical argument order so spearman(x, y) and spearman(y, x) draw the
  // same permutations and report the same p
  if (std::lexicographical_compare(ry.begin(), ry.end(), rx.begin(), rx.end())) {
    std::swap(rx, ry);
  }
  PermutationScorer scorer(rx, ry);
  std::mt19937_64 rng(seed);
  std::int64_t hits = 0;
  for (int i = 0; i < draws; ++i) {
    std::shuffle(scorer.y_rank.begin(), scorer.y_rank.end(), rng);
    if (scorer.abs_rho() >= abs_observed - kRhoEps) ++hits;
  }
  // Add-one estimator: the observed labelling counts as one draw, keeping
  // the estimate strictly positive.
  return static_cast<double>(hits + 1) / static_cast<double>(draws + 1);
}

}  // namespace

std::string_view to_string(PValueMethod m) {
  switch (m) {
    case PValueMethod::TApprox: return "tapprox";
    case PValueMethod::Permutation: return "permutation";
  }
  return "tapprox";
}

std::vector<double> rank_with_ties(std::span<const double> values) {
  if (values.empty()) throw LengthMismatchError("rank_with_ties: empty input");
  require_finite(values);

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j (0-based) share the mean of ranks i+1..j+1
    const double shared = static_cast<double>(i + j + 2) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

CorrelationResult spearman(std::span<const double> x, std::span<const double> y,
                           const SpearmanOptions& options) {
  if (x.size() != y.size()) {
    throw LengthMismatchError("spearman: input lengths differ");
  }
  const std::size_t n = x.size();
  if (n < 3) throw LengthMismatchError("spearman: need at least 3 observations");
  require_finite(x);
  require_finite(y);

  const auto [x_min, x_max] = std::minmax_element(x.begin(), x.end());
  if (*x_min == *x_max) throw DegenerateVarianceError("spearman: x is constant");
  const auto [y_min, y_max] = std::minmax_element(y.begin(), y.end());
  if (*y_min == *y_max) throw DegenerateVarianceError("spearman: y is constant");

  const std::vector<double> rx = rank_with_ties(x);
  const std::vector<double> ry = rank_with_ties(y);
  const double rho = pearson(rx, ry);

  CorrelationResult result;
  result.rho = rho;
  result.n = static_cast<std::int64_t>(n);

  if (n <= 7) {
    result.method = PValueMethod::Permutation;
    result.p_value = exact_permutation_p(rx, ry, std::abs(rho));
  } else if (n <= 10) {
    result.method = PValueMethod::Permutation;
    result.p_value =
        monte_carlo_permutation_p(rx, ry, std::abs(rho), options.mc_seed, options.mc_draws);
  } else {
    result.method = PValueMethod::TApprox;
    const double denom = 1.0 - rho * rho;
    if (denom <= 0.0) {
      result.p_value = 0.0;  // |rho| == 1: t diverges
    } else {
      const double df = static_cast<double>(n - 2);
      const double t = rho * std::sqrt(df / denom);
      result.p_value = student_t_two_sided_p(t, df);
    }
  }
  return result;
}

RegressionResult ols_regression(std::span<const Point> points) {
  if (points.size() < 2) {
    throw LengthMismatchError("ols_regression: need at least 2 points");
  }
  double x_min = points.front().x, x_max = points.front().x;
  double y_min = points.front().y, y_max = points.front().y;
  for (const Point& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw NonFiniteValueError("ols_regression: non-finite point");
    }
    x_min = std::min(x_min, p.x);
    x_max = std::max(x_max, p.x);
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }
  if (x_min == x_max) throw DegenerateXError("ols_regression: all x equal");

  const double n = static_cast<double>(points.size());
  double sum_x = 0.0, sum_y = 0.0;
  for (const Point& p : points) {
    sum_x += p.x;
    sum_y += p.y;
  }
  const double mean_x = sum_x / n;
  const double mean_y = sum_y / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const Point& p : points) {
    const double dx = p.x - mean_x;
    const double dy = p.y - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }

  RegressionResult result;
  result.n = static_cast<std::int64_t>(points.size());
  result.slope = sxy / sxx;
  result.intercept = mean_y - result.slope * mean_x;
  // A flat response is fit perfectly by the flat line.
  result.r_squared = (y_min == y_max) ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
  return result;
}

double student_t_two_sided_p(double t, double df) {
  if (df <= 0.0) throw std::invalid_argument("student_t_two_sided_p: df must be positive");
  if (!std::isfinite(t)) return 0.0;
  const double x = df / (df + t * t);
  return std::clamp(detail::regularized_incomplete_beta(df / 2.0, 0.5, x), 0.0, 1.0);
}

namespace detail {

namespace {

// Continued fraction for the incomplete beta (modified Lentz).
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kFpMin = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * betacf(a, b, x) / a;
  }
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

}  // namespace detail

}  // namespace uimpact::stats

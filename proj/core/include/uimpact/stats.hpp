#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace uimpact::stats {

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr int kMonteCarloDraws = 100000;

class LengthMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonFiniteValueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A constant column has no rank variance; the correlation is undefined and
// is reported as this error instead of a fabricated zero.
class DegenerateVarianceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateXError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class PValueMethod { TApprox, Permutation };

std::string_view to_string(PValueMethod m);

struct CorrelationResult {
  double rho = 0.0;
  std::int64_t n = 0;
  double p_value = 1.0;
  PValueMethod method = PValueMethod::TApprox;
};

struct RegressionResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::int64_t n = 0;
};

// Fractional (average) ranks, 1-based: tied values share the mean of the
// rank positions they occupy, so the rank sum is always n(n+1)/2.
// Throws NonFiniteValueError on NaN/inf, LengthMismatchError when empty.
std::vector<double> rank_with_ties(std::span<const double> values);

struct SpearmanOptions {
  std::uint64_t mc_seed = kDefaultSeed;  // seed for the Monte-Carlo branch
  int mc_draws = kMonteCarloDraws;
};

// Spearman rank-order correlation: Pearson correlation of average ranks
// (not the d-squared shortcut, which is biased under ties).
//
// Two-sided p-value, method recorded in the result:
//   n <= 7        exact permutation over all n! orderings
//   8 <= n <= 10  Monte-Carlo permutation, seeded, mc_draws draws
//   n > 10        t approximation, t = rho*sqrt((n-2)/(1-rho^2)), df = n-2
CorrelationResult spearman(std::span<const double> x, std::span<const double> y,
                           const SpearmanOptions& options = {});

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Least squares line fit: slope = Sxy/Sxx, intercept = ybar - slope*xbar,
// r_squared = Sxy^2/(Sxx*Syy), with Syy = 0 defined as r_squared = 1.
// Throws DegenerateXError when all x are equal.
RegressionResult ols_regression(std::span<const Point> points);

// P(|T| > t) for Student's t with df degrees of freedom.
double student_t_two_sided_p(double t, double df);

namespace detail {
// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);
}  // namespace detail

}  // namespace uimpact::stats

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "uimpact/stats.hpp"

using namespace uimpact;
using doctest::Approx;

TEST_CASE("rank_with_ties basic conventions") {
  CHECK(stats::rank_with_ties(std::vector<double>{10, 20, 30}) ==
        std::vector<double>{1, 2, 3});
  CHECK(stats::rank_with_ties(std::vector<double>{10, 20, 20, 30}) ==
        std::vector<double>{1, 2.5, 2.5, 4});
  CHECK(stats::rank_with_ties(std::vector<double>{5, 5, 5, 5}) ==
        std::vector<double>{2.5, 2.5, 2.5, 2.5});
}

TEST_CASE("rank_with_ties rank sum is always n(n+1)/2") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> n_dist(1, 40);
  std::uniform_int_distribution<int> value_dist(0, 9);  // plenty of ties
  for (int trial = 0; trial < 200; ++trial) {
    const int n = n_dist(rng);
    std::vector<double> values(n);
    for (auto& v : values) v = value_dist(rng);
    const auto ranks = stats::rank_with_ties(values);
    const double sum = std::accumulate(ranks.begin(), ranks.end(), 0.0);
    CHECK(sum == Approx(n * (n + 1) / 2.0).epsilon(1e-12));
    CHECK(ranks == oracle::average_ranks(values));
  }
}

TEST_CASE("rank_with_ties error paths") {
  CHECK_THROWS_AS(stats::rank_with_ties(std::vector<double>{}),
                  stats::LengthMismatchError);
  CHECK_THROWS_AS(stats::rank_with_ties(std::vector<double>{1.0, std::nan("")}),
                  stats::NonFiniteValueError);
  CHECK_THROWS_AS(
      stats::rank_with_ties(std::vector<double>{1.0, std::numeric_limits<double>::infinity()}),
      stats::NonFiniteValueError);
}

TEST_CASE("spearman perfect and inverse agreement") {
  const std::vector<double> x{1, 2, 3, 4};
  CHECK(stats::spearman(x, x).rho == Approx(1.0).epsilon(1e-15));
  const std::vector<double> reversed{4, 3, 2, 1};
  CHECK(stats::spearman(x, reversed).rho == Approx(-1.0).epsilon(1e-15));
}

TEST_CASE("spearman matches the d-squared shortcut on untied data") {
  // n=5, sum d^2 = 4: rho = 1 - 6*4/(5*24) = 0.8
  const std::vector<double> x{1, 2, 3, 4, 5};
  const std::vector<double> y{2, 1, 4, 3, 5};
  const auto result = stats::spearman(x, y);
  CHECK(result.rho == Approx(0.8).epsilon(1e-15));
  CHECK(result.n == 5);
  CHECK(result.method == stats::PValueMethod::Permutation);
  // exact enumeration over 5! orderings: 672/5040
  CHECK(result.p_value == Approx(672.0 / 5040.0).epsilon(1e-12));
}

TEST_CASE("spearman exact permutation p-values, frozen enumerations") {
  // counts of |rho_perm| >= |rho| were enumerated independently
  const auto p1 = stats::spearman(std::vector<double>{1, 2, 3, 4},
                                  std::vector<double>{2, 1, 4, 3});
  CHECK(p1.rho == Approx(0.6).epsilon(1e-12));
  CHECK(p1.p_value == Approx(0.416666666666667).epsilon(1e-12));

  const auto p2 = stats::spearman(std::vector<double>{1, 2, 2, 4},
                                  std::vector<double>{3, 1, 4, 4});
  CHECK(p2.rho == Approx(0.5).epsilon(1e-12));
  CHECK(p2.p_value == Approx(0.666666666666667).epsilon(1e-12));

  const auto p3 = stats::spearman(std::vector<double>{1, 2, 3, 4, 5, 6},
                                  std::vector<double>{6, 3, 5, 1, 4, 2});
  CHECK(p3.rho == Approx(-0.6).epsilon(1e-12));
  CHECK(p3.p_value == Approx(0.241666666666667).epsilon(1e-12));
}

TEST_CASE("spearman tied instance matches rank-then-pearson") {
  const std::vector<double> x{1, 2, 2, 4, 5, 5, 5};
  const std::vector<double> y{3, 1, 4, 4, 2, 6, 5};
  const auto result = stats::spearman(x, y);
  CHECK(result.rho == Approx(0.4814750064314677).epsilon(1e-12));  // frozen oracle value
  CHECK(result.rho == Approx(oracle::spearman_rho(x, y)).epsilon(1e-12));
  CHECK(result.method == stats::PValueMethod::Permutation);
  CHECK(result.p_value > 0.0);
  CHECK(result.p_value <= 1.0);
}

TEST_CASE("spearman t-approximation p-values, frozen reference values") {
  // reference p computed with an independent t survival function
  struct Case {
    double rho;
    int n;
    double p;
  };
  // build vectors that hit the target rho exactly via planted d^2 is fiddly;
  // instead exercise the t path through student_t_two_sided_p directly
  const Case cases[] = {
      {0.5, 20, 0.0247695588},
      {-0.3, 100, 0.002425733463},
      {0.228, 127, 0.009935259428},
      {-0.470, 89, 3.367763009e-06},
      {-0.225, 56, 0.09546998406},
      {-0.147, 259, 0.01792461168},
  };
  for (const auto& c : cases) {
    const double df = c.n - 2;
    const double t = c.rho * std::sqrt(df / (1 - c.rho * c.rho));
    CHECK(stats::student_t_two_sided_p(t, df) == Approx(c.p).epsilon(1e-8));
  }
}

TEST_CASE("regularized incomplete beta, frozen reference values") {
  using stats::detail::regularized_incomplete_beta;
  CHECK(regularized_incomplete_beta(0.5, 0.5, 0.3) ==
        Approx(0.369010119565545).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(2.0, 3.0, 0.5) == Approx(0.6875).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(5.0, 0.5, 0.9) ==
        Approx(0.316642915020012).epsilon(1e-12));
  CHECK(regularized_incomplete_beta(100.0, 0.5, 0.995) ==
        Approx(0.31730898797001).epsilon(1e-11));
  CHECK(regularized_incomplete_beta(1572.0, 0.5, 0.999) ==
        Approx(0.0761565985584503).epsilon(1e-11));
  CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
}

TEST_CASE("spearman chooses the documented p-value method per sample size") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> dist(0, 1);
  const auto draw = [&](int n) {
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return v;
  };
  CHECK(stats::spearman(draw(7), draw(7)).method == stats::PValueMethod::Permutation);
  CHECK(stats::spearman(draw(10), draw(10)).method == stats::PValueMethod::Permutation);
  CHECK(stats::spearman(draw(11), draw(11)).method == stats::PValueMethod::TApprox);
}

TEST_CASE("spearman error paths") {
  const std::vector<double> x{1, 2, 3};
  CHECK_THROWS_AS(stats::spearman(x, std::vector<double>{1, 2}),
                  stats::LengthMismatchError);
  CHECK_THROWS_AS(stats::spearman(std::vector<double>{1, 2}, std::vector<double>{1, 2}),
                  stats::LengthMismatchError);
  // constant column: reported, never fabricated as rho = 0
  CHECK_THROWS_AS(stats::spearman(std::vector<double>{2, 2, 2}, x),
                  stats::DegenerateVarianceError);
  CHECK_THROWS_AS(stats::spearman(x, std::vector<double>{7, 7, 7}),
                  stats::DegenerateVarianceError);
  CHECK_THROWS_AS(stats::spearman(std::vector<double>{1, std::nan(""), 3}, x),
                  stats::NonFiniteValueError);
}

TEST_CASE("spearman is symmetric in its arguments") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> n_dist(3, 14);
  std::uniform_int_distribution<int> value_dist(0, 6);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = n_dist(rng);
    std::vector<double> x(n), y(n);
    for (auto& v : x) v = value_dist(rng);
    for (auto& v : y) v = value_dist(rng);
    if (*std::max_element(x.begin(), x.end()) == *std::min_element(x.begin(), x.end()))
      continue;
    if (*std::max_element(y.begin(), y.end()) == *std::min_element(y.begin(), y.end()))
      continue;
    const auto xy = stats::spearman(x, y);
    const auto yx = stats::spearman(y, x);
    CHECK(xy.rho == Approx(yx.rho).epsilon(1e-15));
    CHECK(xy.p_value == Approx(yx.p_value).epsilon(1e-15));
    CHECK(xy.method == yx.method);
  }
}

TEST_CASE("spearman is invariant under strictly increasing transforms") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> dist(0.1, 50.0);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<double> x(15), y(15);
    for (auto& v : x) v = dist(rng);
    for (auto& v : y) v = dist(rng);
    const double base = stats::spearman(x, y).rho;

    std::vector<double> log_x(x);
    for (auto& v : log_x) v = std::log(v);
    CHECK(stats::spearman(log_x, y).rho == Approx(base).epsilon(1e-12));

    std::vector<double> log_y(y);
    for (auto& v : log_y) v = std::log(v);
    CHECK(stats::spearman(x, log_y).rho == Approx(base).epsilon(1e-12));

    // strictly decreasing transform negates rho
    std::vector<double> neg_y(y);
    for (auto& v : neg_y) v = -v;
    CHECK(stats::spearman(x, neg_y).rho == Approx(-base).epsilon(1e-12));
  }
}

TEST_CASE("spearman equals rank-then-pearson on random tied instances") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> n_dist(3, 30);
  std::uniform_int_distribution<int> tie_dist(0, 8);
  std::uniform_real_distribution<double> real_dist(0, 1);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = n_dist(rng);
    std::vector<double> x(n), y(n);
    const bool tie_heavy = trial % 2 == 0;
    for (int i = 0; i < n; ++i) {
      x[i] = tie_heavy ? tie_dist(rng) : real_dist(rng);
      y[i] = tie_heavy ? tie_dist(rng) : real_dist(rng);
    }
    if (*std::max_element(x.begin(), x.end()) == *std::min_element(x.begin(), x.end()))
      continue;
    if (*std::max_element(y.begin(), y.end()) == *std::min_element(y.begin(), y.end()))
      continue;
    CHECK(stats::spearman(x, y).rho == Approx(oracle::spearman_rho(x, y)).epsilon(1e-12));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("permutation and t-approximation agree within the sanity band at n=10") {
  std::mt19937 rng(31);
  std::normal_distribution<double> noise(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> x(10), y(10);
    for (int i = 0; i < 10; ++i) {
      x[i] = noise(rng);
      y[i] = 0.5 * x[i] + noise(rng);
    }
    const auto mc = stats::spearman(x, y);
    REQUIRE(mc.method == stats::PValueMethod::Permutation);
    const double df = 8.0;
    const double t = mc.rho * std::sqrt(df / (1.0 - mc.rho * mc.rho));
    const double p_t = stats::student_t_two_sided_p(t, df);
    CHECK(std::abs(mc.p_value - p_t) <= 0.02);
  }
}

TEST_CASE("spearman monte carlo p is reproducible per seed") {
  std::vector<double> x{0.3, 1.2, 0.7, 2.2, 1.9, 0.1, 2.8, 1.5, 0.9};  // n=9
  std::vector<double> y{1.0, 0.4, 2.1, 2.5, 0.2, 0.8, 2.9, 1.1, 1.7};
  const auto a = stats::spearman(x, y, {.mc_seed = 42, .mc_draws = 20000});
  const auto b = stats::spearman(x, y, {.mc_seed = 42, .mc_draws = 20000});
  const auto c = stats::spearman(x, y, {.mc_seed = 43, .mc_draws = 20000});
  CHECK(a.p_value == b.p_value);
  CHECK(a.method == stats::PValueMethod::Permutation);
  // a different seed may move the estimate a little, never a lot
  CHECK(std::abs(a.p_value - c.p_value) < 0.02);
}

TEST_CASE("spearman with |rho| = 1 at t-approximation sizes reports p = 0") {
  std::vector<double> x(12), y(12);
  for (int i = 0; i < 12; ++i) {
    x[i] = i;
    y[i] = 2 * i + 1;
  }
  const auto result = stats::spearman(x, y);
  CHECK(result.rho == 1.0);
  CHECK(result.p_value == 0.0);
  CHECK(result.method == stats::PValueMethod::TApprox);
}

TEST_CASE("ols_regression on exact lines") {
  std::vector<stats::Point> points;
  for (int i = 0; i < 6; ++i) {
    points.push_back({static_cast<double>(i), 2.0 * i + 1.0});
  }
  const auto fit = stats::ols_regression(points);
  CHECK(fit.slope == Approx(2.0).epsilon(1e-14));
  CHECK(fit.intercept == Approx(1.0).epsilon(1e-14));
  CHECK(fit.r_squared == Approx(1.0).epsilon(1e-12));
  CHECK(fit.n == 6);
}

TEST_CASE("ols_regression reproduces the four-discipline ratio fit") {
  // printed (all-ratio, rho) pairs; inputs are rounded to 3 decimals, hence
  // the 2e-3 tolerance on the coefficients
  const std::vector<stats::Point> points{
      {0.032, -0.470}, {0.202, -0.225}, {0.180, -0.147}, {0.888, 0.228}};
  const auto fit = stats::ols_regression(points);
  CHECK(std::abs(fit.slope - 0.7183) < 2e-3);
  CHECK(std::abs(fit.intercept - (-0.3873)) < 2e-3);
  CHECK(std::abs(fit.r_squared - 0.9029) < 2e-3);
}

TEST_CASE("ols_regression matches the normal-equations oracle") {
  std::mt19937 rng(37);
  std::uniform_real_distribution<double> dist(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<stats::Point> points;
    std::vector<double> xs, ys;
    for (int i = 0; i < 3 + trial % 10; ++i) {
      const double x = dist(rng), y = dist(rng);
      points.push_back({x, y});
      xs.push_back(x);
      ys.push_back(y);
    }
    if (*std::max_element(xs.begin(), xs.end()) == *std::min_element(xs.begin(), xs.end()))
      continue;
    const auto fit = stats::ols_regression(points);
    const auto expected = oracle::normal_equations(xs, ys);
    CHECK(fit.slope == Approx(expected.slope).epsilon(1e-9));
    CHECK(fit.intercept == Approx(expected.intercept).epsilon(1e-9));
    CHECK(fit.r_squared == Approx(expected.r_squared).epsilon(1e-9));
  }
}

TEST_CASE("ols_regression residuals are orthogonal to x") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> dist(-10, 10);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<stats::Point> points;
    double sum_x = 0;
    for (int i = 0; i < 20; ++i) {
      points.push_back({dist(rng), dist(rng)});
      sum_x += points.back().x;
    }
    const double mean_x = sum_x / 20.0;
    const auto fit = stats::ols_regression(points);
    double dot = 0;
    for (const auto& p : points) {
      const double residual = p.y - (fit.slope * p.x + fit.intercept);
      dot += (p.x - mean_x) * residual;
    }
    CHECK(std::abs(dot) < 1e-9);
  }
}

TEST_CASE("ols_regression error and edge cases") {
  CHECK_THROWS_AS(stats::ols_regression(std::vector<stats::Point>{{1, 2}}),
                  stats::LengthMismatchError);
  CHECK_THROWS_AS(
      stats::ols_regression(std::vector<stats::Point>{{2, 1}, {2, 5}, {2, 9}}),
      stats::DegenerateXError);
  // flat response: r_squared defined as 1
  const auto flat =
      stats::ols_regression(std::vector<stats::Point>{{1, 3}, {2, 3}, {5, 3}});
  CHECK(flat.slope == Approx(0.0));
  CHECK(flat.intercept == Approx(3.0));
  CHECK(flat.r_squared == 1.0);
}

// Copyright 2026 The orientwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orientwalk/estimators.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "orientwalk/error.hpp"
#include "orientwalk/exact.hpp"
#include "orientwalk/stats.hpp"
#include "support/oracles.hpp"

namespace orientwalk {
namespace {

using testing::within_sigma;

double geometric_pmf(int k) { return (2.0 / 3.0) * std::pow(1.0 / 3.0, k); }

TEST(ReturnProbability, TimeZeroIsOne) {
  const std::vector<std::uint64_t> grid{0};
  const auto rows = estimate_return_probability(EnvSpec::iid(), grid, 10, 1);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].value, 1.0);
  EXPECT_EQ(rows[0].estimator_id, "return_probability");
}

TEST(ReturnProbability, FirstEvenTimeMatchesOracles) {
  // Enumerate the two returning vertical paths, both signs and both jumps.
  double sum_equal = 0, both_zero = geometric_pmf(0) * geometric_pmf(0);
  for (int k = 1; k < 200; ++k) sum_equal += geometric_pmf(k) * geometric_pmf(k);
  const double alternate = 0.5 * (both_zero + sum_equal);
  const double iid = 0.5 * (both_zero + 0.5 * sum_equal);
  ASSERT_NEAR(alternate, 0.25, 1e-12);

  const std::vector<std::uint64_t> grid{1};
  constexpr std::int64_t kReps = 400000;
  for (const auto& [spec, oracle] : {std::pair{EnvSpec::alternate(), alternate}, std::pair{EnvSpec::iid(), iid}}) {
    const auto rows = estimate_return_probability(spec, grid, kReps, 2);
    EXPECT_TRUE(within_sigma(rows[0].value, oracle, std::sqrt(oracle * (1 - oracle) / kReps)))
        << law_name(spec.law) << " " << rows[0].value << " vs " << oracle;
  }
}

TEST(ReturnProbability, IidDecaysFasterThanInverseTime) {
  const std::vector<std::uint64_t> grid{16, 32, 64, 128, 256};
  const auto rows = estimate_return_probability(EnvSpec::iid(), grid, 200000, 3);
  std::vector<double> log_n, log_p;
  for (const auto& r : rows) {
    ASSERT_GT(r.value, 0.0);
    log_n.push_back(std::log(static_cast<double>(r.n)));
    log_p.push_back(std::log(r.value));
  }
  EXPECT_LE(fit_line(log_n, log_p).slope, -1.0);
}

TEST(ReturnProbability, ReturnedByIsMonotone) {
  const std::vector<std::uint64_t> grid{1, 2, 5, 10, 50, 100};
  const auto rows = estimate_return_probability(EnvSpec::ising_nn(0.5), grid, 2000, 4);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].extra_value("p_return_by"), rows[i - 1].extra_value("p_return_by"));
    EXPECT_GE(rows[i].extra_value("p_return_by"), rows[i].value);
  }
}

TEST(ReturnProbability, ThreadCountDoesNotMatter) {
  const std::vector<std::uint64_t> grid{1, 10, 100};
  const auto a = estimate_return_probability(EnvSpec::iid(), grid, 500, 5, 1);
  const auto b = estimate_return_probability(EnvSpec::iid(), grid, 500, 5, 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].value, b[i].value);
    EXPECT_EQ(a[i].extra, b[i].extra);
  }
}

TEST(NewmanBound, ZeroLocalTimes) {
  const std::vector<std::uint64_t> eta(5, 0);
  const std::vector<double> t{0.1, 1.0};
  const auto report = verify_newman_bound(0.5, -2, eta, t);
  EXPECT_TRUE(report.all_hold());
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_NEAR(report.lhs[i], 0.0, 1e-15);
    EXPECT_EQ(report.rhs[i], 0.0);
  }
}

TEST(NewmanBound, IndependentSpinsHaveNoGap) {
  const std::vector<std::uint64_t> eta{3, 1, 4, 1, 5};
  const std::vector<double> t{0.01, 0.3, 2.0};
  const auto report = verify_newman_bound(0.0, 0, eta, t);
  EXPECT_TRUE(report.all_hold());
  for (double l : report.lhs) EXPECT_NEAR(l, 0.0, 1e-12);
}

TEST(NewmanBound, TwoSitesClosedForm) {
  // Two spins with correlation r: E exp(i(a s0 + b s1)) = cos a cos b - r sin a sin b.
  const double bj = 0.7, r = std::tanh(0.7);
  const std::vector<std::uint64_t> eta{2, 3};
  const std::vector<double> t{0.05, 0.4, 1.3};
  const auto report = verify_newman_bound(bj, 10, eta, t);
  EXPECT_EQ(report.window_lo, 10);
  EXPECT_EQ(report.window_hi, 11);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_NEAR(report.lhs[i], std::abs(r * std::sin(2 * t[i]) * std::sin(3 * t[i])), 1e-12);
    EXPECT_NEAR(report.rhs[i], 0.5 * t[i] * t[i] * 2 * 2 * 3 * r, 1e-12);
  }
  EXPECT_TRUE(report.all_hold());
}

TEST(NewmanBound, HoldsOnWalkLocalTimes) {
  const std::vector<double> t{0.001, 0.01, 0.1, 1.0};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    // 20 steps span at most 21 levels.
    const auto report = verify_newman_bound_on_path(0.5, 20, seed, t);
    std::uint64_t visits = 0;
    for (auto e : report.eta) visits += e;
    EXPECT_EQ(visits, 21u);
    EXPECT_TRUE(report.all_hold()) << seed;
  }
}

TEST(NewmanBound, SeventeenSiteWindow) {
  std::vector<std::uint64_t> eta(17);
  for (std::size_t i = 0; i < eta.size(); ++i) eta[i] = 1 + (i * 7) % 5;
  const std::vector<double> t{0.001, 0.01, 0.1, 1.0};
  EXPECT_TRUE(verify_newman_bound(0.5, -8, eta, t).all_hold());
}

TEST(NewmanBound, RejectsLargeWindows) {
  const std::vector<std::uint64_t> eta(22, 1);
  const std::vector<double> t{0.1};
  try {
    verify_newman_bound(0.5, 0, eta, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWindowTooLarge);
  }
}

TEST(VarianceScaling, SecondMomentMatchesOracle) {
  const std::vector<std::uint64_t> grid{256};
  for (const EnvSpec& spec : {EnvSpec::iid(), EnvSpec::ising_nn(0.5), EnvSpec::alternate()}) {
    const auto rows = variance_scaling(spec, grid, 0.5, 1.0, 20000, 6);
    ASSERT_EQ(rows.size(), 2u);
    const auto& second = rows[1];
    EXPECT_EQ(second.estimator_id, "second_moment");
    const double oracle = exact::embedded_second_moment(256, correlation_ratio(spec));
    EXPECT_DOUBLE_EQ(second.extra_value("exact"), oracle);
    EXPECT_TRUE(within_sigma(second.value, oracle, second.std_error))
        << law_name(spec.law) << " " << second.value << " vs " << oracle;
  }
}

TEST(VarianceScaling, EqualTimesGiveZeroIncrement) {
  const std::vector<std::uint64_t> grid{64, 128};
  const auto rows = variance_scaling(EnvSpec::iid(), grid, 0.5, 0.5, 50, 7);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].value, 0.0);
  EXPECT_EQ(rows[2].value, 0.0);
  EXPECT_EQ(rows[4].estimator_id, "second_moment_slope");
}

TEST(VarianceScaling, RejectsBadArguments) {
  const std::vector<std::uint64_t> grid{64};
  EXPECT_THROW(variance_scaling(EnvSpec::iid(), grid, 0.8, 0.2, 50, 1), Error);
  const std::vector<std::uint64_t> tiny{4};
  EXPECT_THROW(variance_scaling(EnvSpec::iid(), tiny, 0.2, 0.8, 50, 1), Error);
}

TEST(CorrelationRatio, ByLaw) {
  EXPECT_EQ(correlation_ratio(EnvSpec::iid()), 0.0);
  EXPECT_EQ(correlation_ratio(EnvSpec::alternate()), -1.0);
  EXPECT_EQ(correlation_ratio(EnvSpec::constant()), 1.0);
  EXPECT_DOUBLE_EQ(correlation_ratio(EnvSpec::ising_nn(0.5)), std::tanh(0.5));
  EXPECT_TRUE(std::isnan(correlation_ratio(EnvSpec::ising_lr(0.3, 1.0, 2.5, 100))));
}

TEST(FltCheck, IidVarianceNearTarget) {
  FltOptions options;
  options.reference_draws = 2000;
  const FltReport report = flt_check(EnvSpec::iid(), 4000, 2000, 1.0, 8, 1, options);
  EXPECT_NEAR(report.variance.extra_value("target"), 0.368894 * 0.368894 * 1.063846, 1e-5);
  EXPECT_NEAR(report.variance.extra_value("ratio"), 1.0, 0.15);
  EXPECT_GT(report.ks.extra_value("p_value"), 0.001);
  EXPECT_GE(report.vertical.value, 0.0);
  EXPECT_LE(report.vertical.value, 1.0);
}

TEST(TnRatio, ConcentratesAtThreeHalves) {
  const EstimateRecord r = tn_ratio(10000, 1000, 9);
  EXPECT_EQ(r.extra_value("limit"), 1.5);
  EXPECT_LT(std::abs(r.value - 1.5), 0.005);
  EXPECT_TRUE(within_sigma(r.extra_value("var_over_n"), 0.75, r.extra_value("var_over_n_se")));
}

}  // namespace
}  // namespace orientwalk

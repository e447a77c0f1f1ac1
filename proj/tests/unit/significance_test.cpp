#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "eca/analysis.hpp"
#include "eca/significance.hpp"
#include "oracles.hpp"

namespace eca {
namespace {

TEST(EffectiveTol, FormatAndSymmetryRules) {
  EXPECT_EQ(effective_tol(0, false, SeriesFormat::kEventTimeSeries), 1.0);
  EXPECT_EQ(effective_tol(0, false, SeriesFormat::kEventSequence), 0.0);
  EXPECT_EQ(effective_tol(2, true, SeriesFormat::kEventTimeSeries), 5.0);
  EXPECT_EQ(effective_tol(2, true, SeriesFormat::kEventSequence), 4.0);
  EXPECT_EQ(effective_tol(3, false, SeriesFormat::kEventSequence), 3.0);
}

TEST(AnalyticalPValue, SoilSorghumValues) {
  EXPECT_NEAR(analytical_pvalue(11, 16, 3, 218, 0, 1), 0.03824319, 1e-6);
  EXPECT_NEAR(analytical_pvalue(16, 11, 3, 218, 0, 1), 0.04147892, 1e-6);
}

TEST(AnalyticalPValue, IntercroppingValues) {
  EXPECT_NEAR(analytical_pvalue(18, 6, 2, 218, 0, 1), 0.08495326, 1e-6);
  EXPECT_NEAR(analytical_pvalue(6, 18, 2, 218, 0, 1), 0.07630266, 1e-6);
}

TEST(AnalyticalPValue, TwoTermHandExpansion) {
  // p1 = 1 - (1 - 1/10) = 0.1; P(X >= 1 | n = 2) = 1 - 0.9^2.
  EXPECT_NEAR(analytical_pvalue(2, 1, 1, 10, 0, 1), 0.19, 1e-15);
}

TEST(AnalyticalPValue, ZeroCoincidencesIsExactlyOne) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n_ref = 1 + rng() % 300;
    const std::size_t n_other = 1 + rng() % 300;
    EXPECT_EQ(analytical_pvalue(n_ref, n_other, 0, 1000, static_cast<double>(rng() % 10), 1 + rng() % 5),
              1.0);
  }
}

TEST(AnalyticalPValue, LagShrinksEffectiveLength) {
  const double p_lag = analytical_pvalue(5, 5, 2, 50, 10, 1);
  const double expected = binomial_upper_tail(5, 2, 1.0 - std::pow(1.0 - 1.0 / 40.0, 5));
  EXPECT_NEAR(p_lag, expected, 1e-14);
}

TEST(AnalyticalPValue, Errors) {
  EXPECT_THROW(analytical_pvalue(3, 2, 4, 100, 0, 1), ParameterError);
  EXPECT_THROW(analytical_pvalue(3, 0, 1, 100, 0, 1), ParameterError);
  EXPECT_THROW(analytical_pvalue(3, 2, 1, 10, 10, 1), ParameterError);
  EXPECT_THROW(analytical_pvalue(3, 2, 1, 10, 5, 6), ParameterError);
  EXPECT_NO_THROW(analytical_pvalue(3, 2, 1, 10, 5, 5));
}

TEST(AnalyticalPValue, NonIncreasingInK) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n_ref = 1 + rng() % 150;
    const std::size_t n_other = 1 + rng() % 150;
    const double tol = 1.0 + rng() % 4;
    double prev = 2.0;
    for (std::size_t k = 0; k <= n_ref; ++k) {
      const double p = analytical_pvalue(n_ref, n_other, k, 500, 0, tol);
      EXPECT_LE(p, prev);
      EXPECT_GE(p, 0.0);
      prev = p;
    }
  }
}

TEST(AnalyticalPValue, SymmetricCountsGiveIdenticalSides) {
  // T = 60, N_A = N_B = 6, K = 3: brute-force tail 0.014127657905656.
  const auto a = oracle::series_with_events(60, {3, 11, 20, 31, 45, 58});
  const auto b = oracle::series_with_events(60, {3, 11, 20, 33, 47, 59});
  const auto r = run_eca_ts(a, b, {});
  EXPECT_EQ(r.counts.k_precursor, 3u);
  EXPECT_EQ(r.p_precursor, r.p_trigger);
  EXPECT_NEAR(r.p_precursor, 0.014127657905656, 1e-12);
}

TEST(BinomialTail, AgreesWithHundredDigitSum) {
  for (unsigned n : {1U, 2U, 7U, 30U, 64U, 150U}) {
    for (double p : {1e-4, 0.01, 0.2, 0.5, 0.8, 0.999}) {
      const auto exact = oracle::exact_binomial_tails(n, p);
      for (unsigned k = 0; k <= n; ++k) {
        const double e = static_cast<double>(exact[k]);
        if (e < std::numeric_limits<double>::min()) continue;
        EXPECT_NEAR(binomial_upper_tail(n, k, p), e, 1e-12 * e) << n << ' ' << p << ' ' << k;
      }
    }
  }
}

TEST(BinomialTail, LogTailSurvivesUnderflow) {
  // P(X >= 200) = p^200 for n = 200: 1e-800 underflows a double but not its log.
  EXPECT_NEAR(log_binomial_upper_tail(200, 200, 1e-4), 200 * std::log(1e-4), 1e-9);
  EXPECT_EQ(binomial_upper_tail(200, 200, 1e-4), 0.0);
}

TEST(BinomialTail, EdgeProbabilities) {
  EXPECT_EQ(binomial_upper_tail(10, 0, 0.0), 1.0);
  EXPECT_EQ(binomial_upper_tail(10, 1, 0.0), 0.0);
  EXPECT_EQ(binomial_upper_tail(10, 10, 1.0), 1.0);
  EXPECT_EQ(binomial_upper_tail(10, 11, 0.3), 0.0);
  EXPECT_THROW(binomial_upper_tail(10, 1, 1.5), ParameterError);
}

TEST(MatchProbability, AgreesWithHundredDigitValue) {
  for (unsigned n : {1U, 6U, 16U, 500U}) {
    for (double tol : {0.0, 1.0, 3.0, 7.5}) {
      const double e = static_cast<double>(oracle::exact_match_probability(n, 218, 2, tol));
      EXPECT_NEAR(match_probability(n, 218, 2, tol), e, 1e-14 * std::max(e, 1e-300));
    }
  }
}

TEST(Decide, StrictRejection) {
  EXPECT_FALSE(decide(0.03824319, 0.05));
  EXPECT_TRUE(decide(0.08495326, 0.05));
  EXPECT_TRUE(decide(0.05, 0.05));
}

TEST(SigConfig, Validation) {
  SigConfig sig;
  sig.reps = 0;
  EXPECT_THROW(sig.validate(), ParameterError);
  sig.reps = 1;
  sig.alpha = 1.0;
  EXPECT_THROW(sig.validate(), ParameterError);
  sig.alpha = 0.0;
  EXPECT_THROW(sig.validate(), ParameterError);
}

// ---------------------------------------------------------------------------
// Surrogate tests.

SigConfig seeded(SigMethod m, std::size_t reps, std::uint64_t seed, unsigned threads = 0) {
  SigConfig s;
  s.method = m;
  s.reps = reps;
  s.seed = seed;
  s.threads = threads;
  return s;
}

TEST(ShuffleTest, SaturatedSeriesGiveUnitPValue) {
  // 9 of 10 steps hold events; a symmetric +-1 window always finds a partner.
  std::vector<int> v(10, 1);
  v[4] = 0;
  const auto a = EventTimeSeries::from_indicators(std::span<const int>(v));
  const auto p = shuffle_test(a, a, {1, true, 0}, seeded(SigMethod::kShuffle, 500, 3));
  EXPECT_EQ(p.precursor, 1.0);
  EXPECT_EQ(p.trigger, 1.0);
}

TEST(ShuffleTest, DeterministicAndThreadIndependent) {
  std::mt19937_64 rng(17);
  const auto a = oracle::random_series(rng, 300, 0.06);
  const auto b = oracle::random_series(rng, 300, 0.06);
  const EcaParams params{1, false, 0};
  const auto p1 = shuffle_test(a, b, params, seeded(SigMethod::kShuffle, 3000, 99, 1));
  const auto p2 = shuffle_test(a, b, params, seeded(SigMethod::kShuffle, 3000, 99, 7));
  const auto p3 = shuffle_test(a, b, params, seeded(SigMethod::kShuffle, 3000, 99, 0));
  EXPECT_EQ(p1.precursor, p2.precursor);
  EXPECT_EQ(p1.trigger, p2.trigger);
  EXPECT_EQ(p1.precursor, p3.precursor);
  const auto other = shuffle_test(a, b, params, seeded(SigMethod::kShuffle, 3000, 100, 1));
  EXPECT_TRUE(other.precursor != p1.precursor || other.trigger != p1.trigger);
}

// Large-reps shuffle estimates against the exact permutation null, enumerated
// over all placements.
TEST(ShuffleTest, ConvergesToExhaustivePermutationNull) {
  struct Case {
    std::vector<std::size_t> a, b;
    unsigned steps;
    EcaParams params;
  };
  const std::vector<Case> cases = {
      {{2, 5, 9}, {3, 5, 10}, 12, {0, false, 0}},
      {{2, 5, 9}, {3, 5, 10}, 12, {1, false, 0}},
      {{1, 7}, {6, 8, 11}, 11, {1, true, 0}},
      {{4, 8, 10}, {2, 6}, 10, {1, false, 2}},
      {{3, 9}, {1, 4, 8}, 12, {2, false, 1}},
  };
  const std::size_t reps = 20000;
  for (const auto& c : cases) {
    const auto a = oracle::series_with_events(c.steps, c.a);
    const auto b = oracle::series_with_events(c.steps, c.b);
    const auto counts = count_coincidences(align(a, b), c.params);
    const auto [exact_p, exact_t] = oracle::exhaustive_shuffle_null(
        c.steps, static_cast<unsigned>(c.a.size()), static_cast<unsigned>(c.b.size()),
        counts.k_precursor, counts.k_trigger, c.params.delta_t, c.params.lag, c.params.symmetric);
    const auto est = shuffle_test(a, b, c.params, seeded(SigMethod::kShuffle, reps, 2024));
    const double se_p = std::sqrt(exact_p * (1 - exact_p) / reps);
    const double se_t = std::sqrt(exact_t * (1 - exact_t) / reps);
    EXPECT_LE(std::fabs(est.precursor - exact_p), 3 * se_p) << exact_p;
    EXPECT_LE(std::fabs(est.trigger - exact_t), 3 * se_t) << exact_t;
  }
}

TEST(ShuffleTest, SequencesAndErrors) {
  EventSequence a({1.0, 3.5, 7.25}, {0, 10});
  EventSequence b({1.2, 7.0}, {0, 10});
  const auto p = shuffle_test(a, b, {0.5, false, 0}, seeded(SigMethod::kShuffle, 1000, 1));
  EXPECT_GE(p.precursor, 0.0);
  EXPECT_LE(p.precursor, 1.0);
  EXPECT_THROW(shuffle_test(a, b, {}, seeded(SigMethod::kShuffle, 0, 1)), ParameterError);
  EXPECT_THROW(shuffle_test(EventSequence({}, {0, 10}), b, {}, seeded(SigMethod::kShuffle, 10, 1)),
               DataError);
}

TEST(WaitingTimeTest, NeedsTwoEventsPerSeries) {
  const auto a = EventTimeSeries::from_indicators({0, 1, 0, 0, 1});
  const auto b = EventTimeSeries::from_indicators({0, 1, 0, 0, 0});
  EXPECT_THROW(waiting_time_test(a, b, {}, seeded(SigMethod::kSurrogate, 10, 1)), DataError);
}

TEST(WaitingTimeTest, DeterministicAndBounded) {
  std::mt19937_64 rng(23);
  const auto a = oracle::random_series(rng, 400, 0.08);
  const auto b = oracle::random_series(rng, 400, 0.05);
  const EcaParams params{2, false, 1};
  const auto p1 = waiting_time_test(a, b, params, seeded(SigMethod::kSurrogate, 2000, 5, 1));
  const auto p2 = waiting_time_test(a, b, params, seeded(SigMethod::kSurrogate, 2000, 5, 8));
  EXPECT_EQ(p1.precursor, p2.precursor);
  EXPECT_EQ(p1.trigger, p2.trigger);
  for (double p : {p1.precursor, p1.trigger}) {
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

// Bernoulli series have geometric waiting times, for which both surrogate
// nulls describe the same process up to the event counts: shuffles keep N
// fixed while waiting-time surrogates let it vary, which widens the null of K
// by a relative variance of about 2r/(1-r) for coincidence rate r. Long,
// sparse series with delT = 0 keep that below Monte Carlo resolution.
TEST(WaitingTimeTest, AgreesWithShuffleForGeometricGaps) {
  std::mt19937_64 rng(31);
  const std::size_t reps = 4000;
  for (int i = 0; i < 5; ++i) {
    const auto a = oracle::random_series(rng, 6000, 0.05);
    const auto b = oracle::random_series(rng, 6000, 0.05);
    const EcaParams params{0, false, 0};
    const auto sh = shuffle_test(a, b, params, seeded(SigMethod::kShuffle, reps, 77));
    const auto wt = waiting_time_test(a, b, params, seeded(SigMethod::kSurrogate, reps, 78));
    auto tol = [&](double p, double q) {
      return 3.0 * std::sqrt((p * (1 - p) + q * (1 - q)) / reps) + 0.02;
    };
    EXPECT_NEAR(wt.precursor, sh.precursor, tol(wt.precursor, sh.precursor));
    EXPECT_NEAR(wt.trigger, sh.trigger, tol(wt.trigger, sh.trigger));
  }
}

TEST(RunEca, RecordsResolvedSeed) {
  const auto a = EventTimeSeries::from_indicators({0, 1, 0, 1, 0, 0, 1});
  const auto b = EventTimeSeries::from_indicators({1, 1, 0, 0, 0, 1, 0});
  SigConfig sig;
  sig.method = SigMethod::kShuffle;
  sig.reps = 50;
  const auto r = run_eca_ts(a, b, {}, sig);
  ASSERT_TRUE(r.sig.seed.has_value());
  sig.seed = r.sig.seed;
  const auto again = run_eca_ts(a, b, {}, sig);
  EXPECT_EQ(r.p_precursor, again.p_precursor);
  EXPECT_EQ(r.p_trigger, again.p_trigger);
  EXPECT_FALSE(run_eca_ts(a, b, {}).sig.seed.has_value());
}

}  // namespace
}  // namespace eca

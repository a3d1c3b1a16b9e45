#include "slora/timing.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_util.hpp"

using namespace slora;

TEST_CASE("perfect clock reads true time") {
  const SkmClock clock = SkmClock::with_drift(1e6, 0.0);
  CHECK(clock.reading(0.0) == doctest::Approx(0.0));
  CHECK(clock.reading(17.25) == doctest::Approx(17.25));
  CHECK(clock.drift() == doctest::Approx(0.0));
  CHECK(clock.offset(5.0) == doctest::Approx(0.0));
}

TEST_CASE("initial offset shows up scaled by the tick period") {
  const SkmClock clock{5.0, 1e6, 1e-6, 1e6};
  CHECK(clock.reading(1.0) == doctest::Approx(1.000005).epsilon(1e-12));
  CHECK(clock.offset(1.0) == doctest::Approx(5e-6).epsilon(1e-9));
}

TEST_CASE("rate error accumulates linearly") {
  const SkmClock clock = SkmClock::with_drift(1e6, 20e-6);
  CHECK(clock.reading(60.0) == doctest::Approx(60.0012).epsilon(1e-12));
  CHECK(clock.drift() == doctest::Approx(20e-6).epsilon(1e-9));
}

TEST_CASE("elapsed time since sync scales with the actual rate") {
  const SkmClock nominal = SkmClock::with_drift(32768.0, 0.0);
  CHECK(nominal.elapsed_since_sync(10.0, 70.0) == doctest::Approx(60.0));
  CHECK(nominal.elapsed_since_sync(10.0, 10.0) == doctest::Approx(0.0));

  const SkmClock fast = SkmClock::with_drift(32768.0, 50e-6);
  CHECK(fast.elapsed_since_sync(0.0, 600.0) ==
        doctest::Approx(600.03).epsilon(1e-12));

  CHECK_THROWS_AS(nominal.elapsed_since_sync(10.0, 9.0), std::invalid_argument);
  CHECK_THROWS_AS(SkmClock::with_drift(32768.0, 2e-3), std::invalid_argument);
}

TEST_CASE("propagation stats for the full disk") {
  const PropagationStats stats = propagation_stats(0.0, 1500.0);
  CHECK(stats.mu_s ==
        doctest::Approx(2.0 * 1500.0 / (3.0 * kSpeedOfLight)).epsilon(1e-12));
  CHECK(stats.sigma_s ==
        doctest::Approx(1500.0 / (3.0 * std::sqrt(2.0) * kSpeedOfLight))
            .epsilon(1e-12));
  // quoted values use the rounded speed of light; they agree to a few 1e-3
  CHECK(stats.mu_s == doctest::Approx(3.333e-6).epsilon(5e-3));
  CHECK(stats.sigma_s == doctest::Approx(1.179e-6).epsilon(5e-3));
  CHECK(stats.u_s == doctest::Approx(3.536e-6).epsilon(5e-3));
}

TEST_CASE("disk-case mean/sigma ratio is 2*sqrt(2) for any radius") {
  for (double r : {10.0, 1500.0, 25000.0}) {
    const PropagationStats stats = propagation_stats(0.0, r);
    CHECK(stats.mu_s / stats.sigma_s ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  }
}

TEST_CASE("collapsed annulus degenerates to a fixed delay") {
  const PropagationStats stats = propagation_stats(1000.0, 1000.001);
  CHECK(stats.sigma_s < 1e-12);
  CHECK(stats.mu_s == doctest::Approx(1000.0 / kSpeedOfLight).epsilon(1e-5));
  CHECK_THROWS_AS(propagation_stats(100.0, 100.0), std::domain_error);
  CHECK_THROWS_AS(propagation_stats(200.0, 100.0), std::domain_error);
  CHECK_THROWS_AS(propagation_stats(-1.0, 100.0), std::domain_error);
}

TEST_CASE("triangular-delay Monte Carlo moments match the closed forms") {
  const double r = 1500.0;
  const PropagationStats stats = propagation_stats(0.0, r);
  Rng rng = Rng::substream(3, Stream::Generic);
  const int n = 1000000;
  std::vector<double> delays;
  delays.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double d = r * std::sqrt(rng.uniform01());  // uniform by area
    delays.push_back(d / kSpeedOfLight);
  }
  CHECK(test_util::mean(delays) == doctest::Approx(stats.mu_s).epsilon(0.01));
  CHECK(test_util::sample_std(delays) ==
        doctest::Approx(stats.sigma_s).epsilon(0.01));
}

TEST_CASE("ct detection uncertainty reproduces the measured value") {
  // 0.41 ms systematic, 0.24 ms spread -> 0.34 ms to two significant figures
  const double u = ct_detection_uncertainty(0.41e-3, 0.24e-3);
  CHECK(u == doctest::Approx(0.34e-3).epsilon(0.015));
  CHECK(std::abs(u - 0.34e-3) < 0.005e-3);
  CHECK(ct_detection_uncertainty(0.0, 0.0) == 0.0);
  CHECK(ct_detection_uncertainty(1e-3, 1e-3) == doctest::Approx(1e-3));
}

TEST_CASE("worst-case clock uncertainty, exact form") {
  // k=1, T0=1 us, u_t0s=0.34 ms
  const double u1 = transmission_clock_uncertainty(1, 1e-6, 0.34e-3, 0.0);
  const double expected1 =
      std::sqrt(6.0 * 1e-12 / 3.0 + 5.0 * 0.34e-3 * 0.34e-3);
  CHECK(u1 == doctest::Approx(expected1).epsilon(1e-12));
  CHECK(u1 == doctest::Approx(0.760e-3).epsilon(1e-3));

  // with a negligible tick the detection term dominates: sqrt(401) * u_t0s
  const double u10 = transmission_clock_uncertainty(10, 1e-12, 0.34e-3, 0.0);
  CHECK(u10 == doctest::Approx(std::sqrt(401.0) * 0.34e-3).epsilon(1e-9));
  CHECK(u10 == doctest::Approx(2.0 * 10.0 * 0.34e-3).epsilon(2e-3));

  // without detection error only the quantization terms survive
  const double uq = transmission_clock_uncertainty(1, 1e-6, 0.0, 0.0);
  CHECK(uq == doctest::Approx(std::sqrt(2.0) * 1e-6).epsilon(1e-12));

  CHECK_THROWS_AS(transmission_clock_uncertainty(0, 1e-6, 0.0, 0.0),
                  std::domain_error);
}

TEST_CASE("2k approximation stays within 3% in its stated regime") {
  Rng rng = Rng::substream(5, Stream::Generic);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 10 + static_cast<int>(rng.uniform_int(200));
    const double t0 = rng.uniform(1e-9, 1e-6);
    const double u_t0s = rng.uniform(1e-4, 5e-3);
    const double gamma = rng.uniform(0.0, 1e-4);
    const double exact = transmission_clock_uncertainty(k, t0, u_t0s, gamma);
    const double approx = transmission_clock_uncertainty_simplified(k, u_t0s);
    CHECK(std::abs(exact - approx) / exact <= 0.03);
  }
}

TEST_CASE("combined uncertainty is the quadrature sum") {
  const UncertaintyBudget pythagoras = combined_uncertainty(3.0, 4.0, 0.0);
  CHECK(pythagoras.u_combined_s == doctest::Approx(5.0).epsilon(1e-15));

  const UncertaintyBudget passthrough = combined_uncertainty(0.0, 0.0, 0.42);
  CHECK(passthrough.u_combined_s == 0.42);

  // the clock term dominates the transceiver and propagation terms
  const UncertaintyBudget typical =
      combined_uncertainty(1.4e-6, 3.536e-6, 0.680e-3);
  CHECK(typical.u_combined_s == doctest::Approx(0.680e-3).epsilon(2e-4));
}

TEST_CASE("combined uncertainty is monotone in each component") {
  Rng rng = Rng::substream(6, Stream::Generic);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.uniform(0.0, 1e-3);
    const double b = rng.uniform(0.0, 1e-3);
    const double c = rng.uniform(0.0, 1e-3);
    const double base = combined_uncertainty(a, b, c).u_combined_s;
    CHECK(combined_uncertainty(a + 1e-5, b, c).u_combined_s >= base);
    CHECK(combined_uncertainty(a, b + 1e-5, c).u_combined_s >= base);
    CHECK(combined_uncertainty(a, b, c + 1e-5).u_combined_s >= base);
  }
}

TEST_CASE("budget builder exposes consistent intermediate terms") {
  const int k = 10;
  const double t0 = 1.0 / 32768.0;
  const double u_t0s = 0.34e-3;
  const double gamma = 20e-6;
  const UncertaintyBudget b =
      build_uncertainty_budget(k, t0, u_t0s, gamma, 60.0, 1.4e-6, 3.54e-6);

  CHECK(b.u_td_s == doctest::Approx(t0 / std::sqrt(3.0)).epsilon(1e-12));
  CHECK(b.u_t0q_s == b.u_td_s);
  CHECK(b.u_t0_s ==
        doctest::Approx(std::sqrt(t0 * t0 / 3.0 + u_t0s * u_t0s)).epsilon(1e-12));
  CHECK(b.u_tsync_s == doctest::Approx(2.0 * b.u_t0_s).epsilon(1e-12));
  const double beta = (1.0 + gamma) / t0;
  CHECK(b.u_beta_ticks ==
        doctest::Approx(beta / 60.0 * b.u_tsync_s).epsilon(1e-12));
  CHECK(b.u_v_s ==
        doctest::Approx(transmission_clock_uncertainty(k, t0, u_t0s, gamma))
            .epsilon(1e-12));
  CHECK(b.u_combined_s ==
        doctest::Approx(std::sqrt(b.u_tx_s * b.u_tx_s + b.u_pd_s * b.u_pd_s +
                                  b.u_v_s * b.u_v_s))
            .epsilon(1e-12));
}

TEST_CASE("timing offsets: zero uncertainty means zero offset") {
  Rng rng = Rng::substream(9, Stream::Generic);
  for (int i = 0; i < 100; ++i) {
    CHECK(sample_timing_offset(rng, 0.0) == 0.0);
  }
  CHECK_THROWS_AS(sample_timing_offset(rng, -1e-3), std::domain_error);
}

TEST_CASE("timing offsets reproduce the requested standard deviation") {
  Rng rng = Rng::substream(10, Stream::Generic);
  const double u = 0.68e-3;
  const int n = 1000000;
  std::vector<double> xs;
  xs.reserve(n);
  for (int i = 0; i < n; ++i) {
    xs.push_back(sample_timing_offset(rng, u));
  }
  CHECK(test_util::sample_std(xs) == doctest::Approx(u).epsilon(0.02));
  CHECK(std::abs(test_util::mean(xs)) <=
        3.0 * u / std::sqrt(static_cast<double>(n)));

  Rng replay = Rng::substream(10, Stream::Generic);
  CHECK(sample_timing_offset(replay, u) == xs[0]);
}

TEST_CASE("tick quantization error is uniform over one period") {
  // quantized timestamps round up to the next tick edge; the residual is
  // uniform on [0, T0), std T0/sqrt(12). The T0/sqrt(3) budget entry is the
  // Type B bound for the full interval including its mean.
  const double t0 = 1.0 / 32768.0;
  Rng rng = Rng::substream(11, Stream::Generic);
  const int n = 1000000;
  std::vector<double> errs;
  errs.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = rng.uniform(0.0, 0.1);
    const double quantized = std::ceil(t / t0) * t0;
    const double err = quantized - t;
    CHECK(err >= 0.0);
    CHECK(err < t0 * (1.0 + 1e-9));
    errs.push_back(err);
  }
  CHECK(test_util::sample_std(errs) ==
        doctest::Approx(t0 / std::sqrt(12.0)).epsilon(0.01));
  CHECK(test_util::mean(errs) == doctest::Approx(t0 / 2.0).epsilon(0.01));

  const UncertaintyBudget b =
      build_uncertainty_budget(1, t0, 0.0, 0.0, 60.0, 0.0, 0.0);
  CHECK(b.u_td_s == doctest::Approx(t0 / std::sqrt(3.0)).epsilon(1e-12));
}

#include "risplan/units.hpp"

#include "doctest.h"

#include <cmath>
#include <random>

using namespace risplan;

TEST_CASE("wavelength of common carriers") {
  // c/f on a hand calculator
  CHECK(wavelength_m(Frequency::from_ghz(140.0)) == doctest::Approx(2.14137470e-3).epsilon(1e-9));
  CHECK(wavelength_m(Frequency{speed_of_light_m_s}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(wavelength_m(Frequency::from_ghz(30.0)) == doctest::Approx(9.99308193e-3).epsilon(1e-9));

  CHECK_THROWS_AS(wavelength_m(Frequency{0.0}), std::domain_error);
  CHECK_THROWS_AS(wavelength_m(Frequency{-1.0}), std::domain_error);
}

TEST_CASE("wavelength times frequency recovers c") {
  for (double f : {1e3, 2.4e9, 30e9, 140e9, 1e12}) {
    CHECK(wavelength_m(Frequency{f}) * f == doctest::Approx(speed_of_light_m_s).epsilon(1e-12));
  }
}

TEST_CASE("dB conversions") {
  CHECK(db_from_linear(1.0) == doctest::Approx(0.0));
  CHECK(db_from_linear(0.5) == doctest::Approx(-3.01029996).epsilon(1e-8));
  CHECK(linear_from_db(db_from_linear(7.3)) == doctest::Approx(7.3).epsilon(1e-12));

  CHECK_THROWS_AS(db_from_linear(0.0), std::domain_error);
  CHECK_THROWS_AS(db_from_linear(-2.0), std::domain_error);
}

TEST_CASE("dB round trip across twenty decades") {
  for (int e = -20; e <= 20; ++e) {
    for (double mant : {1.0, 2.7, 9.9}) {
      const double x = mant * std::pow(10.0, e);
      CHECK(linear_from_db(db_from_linear(x)) == doctest::Approx(x).epsilon(1e-12));
    }
  }
}

TEST_CASE("noise power") {
  const NoiseModel nm{-174.0, 5.0};
  CHECK(noise_power(nm, 10e9).dbm == doctest::Approx(-69.0).epsilon(1e-9));
  CHECK(noise_power(NoiseModel{-174.0, 0.0}, 1.0).dbm == doctest::Approx(-174.0));
  CHECK(noise_power(nm, 2.4e9).dbm == doctest::Approx(-75.1978876).epsilon(1e-8));

  CHECK_THROWS_AS(noise_power(nm, 0.0), std::domain_error);
  CHECK_THROWS_AS(noise_power(nm, -1e9), std::domain_error);
}

TEST_CASE("noise power grows with bandwidth and noise figure") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> bw(1e3, 1e11);
  std::uniform_real_distribution<double> nf(0.0, 15.0);
  for (int i = 0; i < 200; ++i) {
    const double b = bw(rng);
    const double f = nf(rng);
    const NoiseModel base{-174.0, f};
    CHECK(noise_power(base, b * 1.01).dbm > noise_power(base, b).dbm);
    CHECK(noise_power(NoiseModel{-174.0, f + 0.1}, b).dbm > noise_power(base, b).dbm);
  }
}

TEST_CASE("snr") {
  CHECK(snr_db(PowerLevel{-59.0}, PowerLevel{-69.0}) == doctest::Approx(10.0));
  CHECK(snr_db(PowerLevel{-59.0}, PowerLevel{-75.1978876}) == doctest::Approx(16.1978876).epsilon(1e-9));
  CHECK(snr_db(PowerLevel{-31.4}, PowerLevel{-31.4}) == doctest::Approx(0.0));
}

TEST_CASE("shannon capacity") {
  // table-grade figures: 2.4 GHz at 16.2 dB and 12 GHz at 9.2 dB
  CHECK(shannon_capacity_bps(2.4e9, 16.2) == doctest::Approx(12.9979e9).epsilon(1e-4));
  CHECK(shannon_capacity_bps(12e9, 9.2) == doctest::Approx(38.6396e9).epsilon(1e-4));
  // 0 dB means exactly 1 bit/s/Hz
  CHECK(shannon_capacity_bps(5e9, 0.0) == doctest::Approx(5e9).epsilon(1e-15));

  CHECK_THROWS_AS(shannon_capacity_bps(0.0, 10.0), std::domain_error);
}

TEST_CASE("shannon capacity monotone and linear in bandwidth") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> bw(1e6, 1e11);
  std::uniform_real_distribution<double> snr(-10.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    const double b = bw(rng);
    const double s = snr(rng);
    CHECK(shannon_capacity_bps(b * 1.01, s) > shannon_capacity_bps(b, s));
    CHECK(shannon_capacity_bps(b, s + 0.1) > shannon_capacity_bps(b, s));
    CHECK(shannon_capacity_bps(b, s) ==
          doctest::Approx(2.0 * shannon_capacity_bps(b / 2.0, s)).epsilon(1e-12));
  }
}

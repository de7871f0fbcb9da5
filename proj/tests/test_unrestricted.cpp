#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "eom/unrestricted.hpp"
#include "oracles.hpp"

using namespace eom;

namespace {

constexpr double kT = 2.0 * std::numbers::pi / 30.0;

ModulatorParams large_s(int s, double gamma) {
  auto p = figure_params(gamma);
  p.spin = Spin::from_twice(2 * s);
  return p;
}

double max_diff(const std::vector<AsymptoticRow>& rows) {
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(r.restricted - r.bessel));
  return worst;
}

std::vector<int> offsets(int k) {
  std::vector<int> v;
  for (int i = -k; i <= k; ++i) v.push_back(i);
  return v;
}

}  // namespace

TEST_CASE("bessel_j special values", "[bessel]") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  for (int n : {1, 2, 7, -3}) CHECK(bessel_j(n, 0.0) == 0.0);
  CHECK(std::abs(bessel_j(1, 2.0) - oracle::bessel_series(1, 2.0)) < 1e-12);
  CHECK(std::abs(bessel_j(1, 2.0) - 0.5767248077568734) < 1e-12);
}

TEST_CASE("bessel_j against the power-series oracle", "[bessel][oracle]") {
  for (double x : {0.3, 1.0, 1.99, 2.0, 3.7, 8.0, 15.0}) {
    for (int n : {0, 1, 2, 5, 10, 20}) {
      const double ref = oracle::bessel_series(n, x);
      INFO("n=" << n << " x=" << x);
      CHECK(std::abs(bessel_j(n, x) - ref) <= 1e-12 * std::max(1e-3, std::abs(ref)));
    }
  }
}

TEST_CASE("bessel_j parity is exact", "[bessel][property]") {
  for (double x : {-7.3, -0.4, 0.9, 4.0, 33.3}) {
    for (int n = 0; n <= 40; ++n) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      CHECK(bessel_j(-n, x) == sign * bessel_j(n, x));
      CHECK(bessel_j(n, -x) == sign * bessel_j(n, x));
    }
  }
}

TEST_CASE("bessel_j three-term recurrence", "[bessel][property]") {
  for (double x = 0.1; x <= 50.0; x += 0.7) {
    for (int n = 1; n <= 50; ++n) {
      const double lhs = bessel_j(n - 1, x) + bessel_j(n + 1, x);
      const double rhs = 2.0 * n / x * bessel_j(n, x);
      const double scale = std::abs(bessel_j(n - 1, x)) + std::abs(bessel_j(n + 1, x));
      INFO("n=" << n << " x=" << x);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * scale + 1e-300);
    }
  }
}

TEST_CASE("bessel_j normalization", "[bessel][property]") {
  for (double x : {0.0, 0.5, 2.0, 9.5, 30.0, 80.0, 100.0}) {
    const int m = static_cast<int>(std::ceil(x)) + 30;
    double s = 0.0;
    for (int n = -m; n <= m; ++n) s += bessel_j(n, x) * bessel_j(n, x);
    INFO("x=" << x);
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
}

TEST_CASE("modulation_index", "[unrestricted]") {
  const auto mi = modulation_index(0.1, 2.0, kT);
  CHECK(std::abs(mi.mu - 80.0 * std::sin(0.05 * kT)) < 1e-15);
  CHECK(std::abs(mi.mu - 0.837743) < 1e-6);
  CHECK(std::abs(mi.mu - 0.837747) < 5e-6);  // commonly quoted rounding
  CHECK(std::abs(modulation_index(1e-12, 2.0, kT).mu - 4.0 * kT) < 1e-15);
  CHECK(std::abs(modulation_index(1e-12, 2.0, kT).mu - 0.837758) < 1e-6);
  CHECK(modulation_index(0.0, 2.0, kT).mu == 4.0 * kT);
  CHECK(modulation_index(0.1, 0.0, kT).mu == 0.0);
  CHECK_THROWS_AS(modulation_index(NAN, 1.0, 1.0), ParameterError);
  // continuity across the small-omega switch
  CHECK(std::abs(modulation_index(2e-8 / kT, 2.0, kT).mu - 4.0 * kT) < 1e-12);
  CHECK(std::abs(modulation_index(figure_params(2.0)).mu - mi.mu) < 1e-14);
}

TEST_CASE("unrestricted_occupations", "[unrestricted]") {
  SECTION("mu = 0") {
    const auto w = unrestricted_occupations(modulation_index(0.1, 0.0, kT), 20);
    CHECK(w.size() == 41);
    CHECK(w[20] == 1.0);
  }
  SECTION("figure 1 modulation index") {
    const auto mi = modulation_index(0.1, 2.0, kT);
    const auto w = unrestricted_occupations(mi, default_cutoff(mi.mu));
    const int m = default_cutoff(mi.mu);
    const double j0 = oracle::bessel_series(0, mi.mu);
    CHECK(std::abs(w[m] - j0 * j0) < 1e-14);
    CHECK(std::abs(w[m] - 0.6924) < 5e-5);
    double s = 0.0;
    for (double v : w) s += v;
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
  SECTION("cutoff below ceil(mu) + 20 is rejected") {
    const auto mi = modulation_index(0.1, 24.25, kT);
    CHECK_THROWS_AS(unrestricted_occupations(mi, minimum_cutoff(mi.mu) - 1), ParameterError);
    CHECK_NOTHROW(unrestricted_occupations(mi, minimum_cutoff(mi.mu)));
  }
}

TEST_CASE("classical_signal_check", "[unrestricted]") {
  CHECK(classical_signal_check(0.0, 256) < 1e-14);
  CHECK(classical_signal_check(1.5, 1024) < 1e-10);
  CHECK(classical_signal_check(5.0, 4096) < 1e-10);
  CHECK_THROWS_AS(classical_signal_check(1.0, 128), ParameterError);
  CHECK_THROWS_AS(classical_signal_check(1.0, 1000), ParameterError);
}

TEST_CASE("asymptotic_compare preconditions", "[unrestricted]") {
  const auto v = offsets(0);
  auto p = large_s(20, 2.0);
  p.OmegaMW = p.Omega;
  CHECK_THROWS_AS(asymptotic_compare(p, v), ParameterError);
  const std::vector<int> too_far{3};
  CHECK_THROWS_AS(asymptotic_compare(large_s(20, 2.0), too_far), ParameterError);
}

TEST_CASE("asymptotic_compare without coupling", "[unrestricted]") {
  const auto rows = asymptotic_compare(large_s(20, 0.0), offsets(2));
  for (const auto& r : rows) {
    CHECK(std::abs(r.restricted - (r.dm == 0 ? 1.0 : 0.0)) < 1e-14);
    CHECK(std::abs(r.bessel - (r.dm == 0 ? 1.0 : 0.0)) < 1e-14);
  }
}

TEST_CASE("restricted model converges to the Bessel limit", "[unrestricted][large]") {
  const double d200_g2 = max_diff(asymptotic_compare(large_s(200, 2.0), offsets(5)));
  const double d200_g10 = max_diff(asymptotic_compare(large_s(200, 10.0), offsets(8)));
  CHECK(d200_g2 < 1e-2);
  CHECK(d200_g10 < 2e-2);
  const double d50 = max_diff(asymptotic_compare(large_s(50, 2.0), offsets(5)));
  const double d100 = max_diff(asymptotic_compare(large_s(100, 2.0), offsets(5)));
  CHECK(d100 < 1.1 * d50);
  CHECK(d200_g2 < 1.1 * d100);
  // Roughly 1/S^2 convergence observed on the first verified build.
  CHECK(d200_g2 < 0.5 * d50);
}

#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "eom/detection.hpp"

using namespace eom;

namespace {

std::vector<double> grid(double a, double b, double step) {
  std::vector<double> g;
  const int n = static_cast<int>(std::llround((b - a) / step));
  for (int i = 0; i <= n; ++i) g.push_back(a + step * i);
  return g;
}

}  // namespace

TEST_CASE("filter_kernel", "[detection]") {
  FilterSpec f;
  CHECK(filter_kernel(f, 0.0) == 1.0);
  CHECK(std::abs(filter_kernel(f, 4.0) - std::exp(-1.0)) < 1e-16);
  CHECK(std::abs(filter_kernel(f, -4.0) - 0.367879) < 1e-6);
  CHECK(std::abs(filter_kernel(f, 30.0) / std::exp(-56.25) - 1.0) < 1e-13);
  f.center = 2.5;
  CHECK(filter_kernel(f, 2.5) == 1.0);
  f.half_width = 0.0;
  CHECK_THROWS_AS(filter_kernel(f, 0.0), ParameterError);
  f.half_width = -1.0;
  CHECK_THROWS_AS(f.validate(), ParameterError);
}

TEST_CASE("relative_count_rate", "[detection]") {
  const FilterSpec f;
  SECTION("no coupling") {
    const auto p = figure_params(0.0);
    CHECK(relative_count_rate(p, f, 0.0) == 1.0);
    CHECK(std::abs(relative_count_rate(p, f, 30.0) - std::exp(-(30.0 / 4.0) * (30.0 / 4.0))) <
          1e-30);
  }
  SECTION("figure 1 at the carrier is the central weight") {
    const auto p = figure_params(2.0);
    const double r00 = std::norm(propagator(p).R(3, 3));
    CHECK(std::abs(relative_count_rate(p, f, 0.0) - r00) < 1e-10);
  }
  SECTION("filter center is ignored") {
    FilterSpec g;
    g.center = 17.0;
    const auto p = figure_params(10.0);
    CHECK(relative_count_rate(p, g, 3.0) == relative_count_rate(p, f, 3.0));
  }
}

TEST_CASE("spectral_scan invariants", "[detection][property]") {
  const FilterSpec f;
  const auto g = grid(-60.0, 60.0, 0.5);
  for (double gamma : {0.0, 2.0, 10.0, 24.25}) {
    const auto p = figure_params(gamma);
    const auto scan = spectral_scan(p, f, g);
    INFO("gamma=" << gamma);
    REQUIRE(scan.restricted.size() == g.size());
    REQUIRE(scan.unrestricted.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(scan.restricted[i] >= 0.0);
      CHECK(scan.restricted[i] <= 1.0 + 1e-15);
      CHECK(scan.unrestricted[i] >= 0.0);
      CHECK(scan.unrestricted[i] <= 1.0 + 1e-15);
      CHECK(scan.restricted[i] == relative_count_rate(p, f, g[i]));
    }
    // Local maxima sit within one grid step of a multiple of Omega.
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
      const double v = scan.restricted[i];
      if (v > 1e-6 && v > scan.restricted[i - 1] && v >= scan.restricted[i + 1]) {
        const double k = std::round(g[i] / 30.0);
        CHECK(std::abs(g[i] - 30.0 * k) <= 0.5);
      }
    }
    // Mirror symmetry under omega -> -omega.
    auto q = p;
    q.OmegaMW = p.Omega + p.detuning();
    const auto mirrored = spectral_scan(q, f, g);
    for (std::size_t i = 0; i < g.size(); ++i)
      CHECK(std::abs(scan.restricted[i] - mirrored.restricted[g.size() - 1 - i]) < 1e-12);
  }
}

TEST_CASE("spectral_scan without coupling is the bare kernel", "[detection]") {
  const FilterSpec f;
  const auto g = grid(-10.0, 10.0, 0.25);
  const auto scan = spectral_scan(figure_params(0.0), f, g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double k = filter_kernel(f, g[i]);
    CHECK(std::abs(scan.restricted[i] - k) < 1e-15);
    CHECK(std::abs(scan.unrestricted[i] - k) < 1e-15);
  }
}

TEST_CASE("spectral_scan saturation versus spreading", "[detection]") {
  const FilterSpec f;
  const std::vector<double> sidebands{-150.0, -120.0, -90.0, 0.0, 90.0, 120.0, 150.0};
  SECTION("figure 1: curves agree on the first sidebands") {
    const auto s = spectral_scan(figure_params(2.0), f, std::vector<double>{-30.0, 0.0, 30.0});
    for (std::size_t i = 0; i < 3; ++i)
      CHECK(std::abs(s.restricted[i] - s.unrestricted[i]) < 0.1 * s.unrestricted[i]);
  }
  SECTION("figure 3: restricted re-concentrates at the carrier") {
    const auto s = spectral_scan(figure_params(24.25), f, sidebands);
    CHECK(s.restricted[3] > s.unrestricted[3]);
    CHECK(s.restricted[0] < 1e-20);
    CHECK(s.restricted[6] < 1e-20);
    CHECK(s.unrestricted[0] + s.unrestricted[6] > 1e-2);
  }
}

TEST_CASE("spectral_scan grid validation", "[detection]") {
  const FilterSpec f;
  const auto p = figure_params(2.0);
  CHECK_THROWS_AS(spectral_scan(p, f, std::vector<double>{}), ParameterError);
  CHECK_THROWS_AS(spectral_scan(p, f, std::vector<double>{0.0, 0.0}), ParameterError);
  CHECK_THROWS_AS(spectral_scan(p, f, std::vector<double>{1.0, 0.0}), ParameterError);
}

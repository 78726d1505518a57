#include <doctest.h>

#include <cmath>
#include <complex>

#include "haar.hpp"
#include "monte_carlo.hpp"

using namespace haarint;
using schur_weyl::IndexTuple;

namespace {

constexpr std::uint64_t kSamples = 100000;

double sigma_distance(const mc::MomentEstimate& est, const Rational& exact) {
  double gap = std::abs(est.mean_re - exact.get_d());
  return gap / (est.std_error > 0 ? est.std_error : 1e-300);
}

}  // namespace

TEST_CASE("samples are unitary") {
  std::mt19937_64 rng(99);
  for (long n = 1; n <= 6; ++n) {
    auto u = mc::haar_sample(n, rng);
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c) {
        std::complex<double> acc{0.0, 0.0};
        for (long k = 0; k < n; ++k) acc += u[r][k] * std::conj(u[c][k]);
        double want = r == c ? 1.0 : 0.0;
        CHECK(std::abs(acc - want) < 1e-12);
      }
  }
  CHECK_THROWS_AS(mc::haar_sample(0, rng), std::invalid_argument);
}

TEST_CASE("estimates are deterministic in the seed") {
  auto a = mc::mc_moment({1}, {1}, {1}, {1}, 3, 4000, 777);
  auto b = mc::mc_moment({1}, {1}, {1}, {1}, 3, 4000, 777);
  CHECK(a.mean_re == b.mean_re);
  CHECK(a.mean_im == b.mean_im);
  CHECK(a.std_error == b.std_error);
  CHECK(a.samples == 4000);
  CHECK(a.seed == 777);
  auto c = mc::mc_moment({1}, {1}, {1}, {1}, 3, 4000, 778);
  CHECK(a.mean_re != c.mean_re);
}

TEST_CASE("sample counts that do not divide the stream count") {
  auto est = mc::mc_moment({1}, {1}, {1}, {1}, 2, 1003, 5);
  CHECK(est.samples == 1003);
  auto tiny = mc::mc_moment({1}, {1}, {1}, {1}, 2, 2, 5);
  CHECK(tiny.samples == 2);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(mc::mc_moment({1}, {1}, {1}, {1}, 3, 1, 7), std::invalid_argument);
  CHECK_THROWS_AS(mc::mc_moment({1}, {1}, {1}, {1}, 0, 100, 7), std::invalid_argument);
  CHECK_THROWS_AS(mc::mc_moment({1, 4}, {1, 1}, {1, 4}, {1, 1}, 3, 100, 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(mc::mc_moment({1, 2}, {1}, {1, 2}, {1, 1}, 3, 100, 7),
                  std::invalid_argument);
}

TEST_CASE("size one moments are exact up to round off") {
  auto est = mc::mc_moment({1}, {1}, {1}, {1}, 1, 100, 42);
  CHECK(est.mean_re == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(est.mean_im) < 1e-12);
  CHECK(est.std_error < 1e-12);
  auto est2 = mc::mc_moment({1, 1}, {1, 1}, {1, 1}, {1, 1}, 1, 100, 42);
  CHECK(est2.mean_re == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(est2.std_error < 1e-12);
}

TEST_CASE("estimates agree with exact moments within five sigma") {
  struct Case {
    IndexTuple i, j, k, l;
    long n;
  };
  std::vector<Case> cases = {
      {{1}, {1}, {1}, {1}, 2},
      {{2}, {2}, {2}, {2}, 4},
      {{1, 1}, {1, 1}, {1, 1}, {1, 1}, 2},
      {{1, 1}, {1, 1}, {1, 1}, {1, 1}, 4},
      {{1, 2}, {1, 2}, {1, 2}, {1, 2}, 3},
      {{1, 2}, {1, 2}, {1, 2}, {2, 1}, 3},
      {{1, 2}, {1, 1}, {1, 2}, {1, 1}, 4},
      {{1, 1, 2}, {1, 2, 1}, {1, 1, 2}, {1, 2, 1}, 3},
      {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}, {1, 2, 3}, 3},
      {{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}, 4},
  };
  std::uint64_t seed = 2024;
  for (const auto& c : cases) {
    Rational exact = moments::moment(c.i, c.j, c.k, c.l, c.n);
    auto est = mc::mc_moment(c.i, c.j, c.k, c.l, c.n, kSamples, seed++);
    CHECK(sigma_distance(est, exact) < 5.0);
    CHECK(std::abs(est.mean_im) < 5.0 * (est.std_error > 0 ? est.std_error : 1e-300));
  }
}

TEST_CASE("vanishing moments stay near zero") {
  auto est = mc::mc_moment({1, 1}, {1, 1}, {1, 1}, {1, 2}, 3, kSamples, 31337);
  CHECK(std::abs(est.mean_re) < 5.0 * est.std_error);
  CHECK(std::abs(est.mean_im) < 5.0 * est.std_error);
}

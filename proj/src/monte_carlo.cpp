#include "monte_carlo.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <thread>

namespace haarint::mc {

namespace {

Eigen::MatrixXcd haar_sample_eigen(long n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(n, n);
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) {
      double re = gauss(rng);
      double im = gauss(rng);
      g(r, c) = std::complex<double>(re, im);
    }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long c = 0; c < n; ++c) {
    std::complex<double> diag = r(c, c);
    double mag = std::abs(diag);
    std::complex<double> phase = mag > 0 ? diag / mag : std::complex<double>(1.0, 0.0);
    q.col(c) *= phase;
  }
  return q;
}

struct SubstreamSums {
  std::complex<double> sum{0.0, 0.0};
  double sum_sq = 0.0;
  std::uint64_t count = 0;
};

SubstreamSums run_substream(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                            const IndexTuple& l, long n, std::uint64_t count,
                            std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                   static_cast<std::uint32_t>(stream)};
  std::mt19937_64 rng(sq);
  size_t d = i.size();
  SubstreamSums sums;
  for (std::uint64_t s = 0; s < count; ++s) {
    Eigen::MatrixXcd u = haar_sample_eigen(n, rng);
    std::complex<double> z(1.0, 0.0);
    for (size_t a = 0; a < d; ++a) {
      z *= u(i[a] - 1, j[a] - 1);
      z *= std::conj(u(k[a] - 1, l[a] - 1));
    }
    sums.sum += z;
    sums.sum_sq += std::norm(z);
    ++sums.count;
  }
  return sums;
}

}  // namespace

std::vector<std::vector<std::complex<double>>> haar_sample(long n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  Eigen::MatrixXcd q = haar_sample_eigen(n, rng);
  std::vector<std::vector<std::complex<double>>> out(n, std::vector<std::complex<double>>(n));
  for (long r = 0; r < n; ++r)
    for (long c = 0; c < n; ++c) out[r][c] = q(r, c);
  return out;
}

MomentEstimate mc_moment(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                         const IndexTuple& l, long n, std::uint64_t samples,
                         std::uint64_t seed) {
  int d = static_cast<int>(i.size());
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (samples < 2) throw std::invalid_argument("need at least two samples");
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  schur_weyl::validate_index_tuple(i, d, n);
  schur_weyl::validate_index_tuple(j, d, n);
  schur_weyl::validate_index_tuple(k, d, n);
  schur_weyl::validate_index_tuple(l, d, n);

  const std::uint64_t streams = std::min<std::uint64_t>(8, samples);
  std::vector<SubstreamSums> partial(streams);
  std::vector<std::thread> workers;
  workers.reserve(streams);
  for (std::uint64_t s = 0; s < streams; ++s) {
    std::uint64_t count = samples / streams + (s < samples % streams ? 1 : 0);
    workers.emplace_back([&, s, count] {
      partial[s] = run_substream(i, j, k, l, n, count, seed, s);
    });
  }
  for (auto& w : workers) w.join();

  std::complex<double> total{0.0, 0.0};
  double total_sq = 0.0;
  std::uint64_t total_count = 0;
  for (const auto& p : partial) {
    total += p.sum;
    total_sq += p.sum_sq;
    total_count += p.count;
  }
  double nn = static_cast<double>(total_count);
  std::complex<double> mean = total / nn;
  double var = (total_sq - std::norm(total) / nn) / (nn - 1.0);
  if (var < 0.0) var = 0.0;
  MomentEstimate est;
  est.mean_re = mean.real();
  est.mean_im = mean.imag();
  est.std_error = std::sqrt(var / nn);
  est.samples = total_count;
  est.seed = seed;
  return est;
}

}  // namespace haarint::mc

#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "schur_weyl.hpp"

namespace haarint::mc {

using schur_weyl::IndexTuple;

struct MomentEstimate {
  double mean_re = 0.0;
  double mean_im = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// One Haar-distributed unitary: complex Ginibre matrix, QR factorization,
// columns rescaled so the R diagonal is positive.
std::vector<std::vector<std::complex<double>>> haar_sample(long n, std::mt19937_64& rng);

// Sample average of the monomial prod u_{i_a j_a} prod conj(u_{k_a l_a});
// deterministic for a fixed seed regardless of thread count.
MomentEstimate mc_moment(const IndexTuple& i, const IndexTuple& j, const IndexTuple& k,
                         const IndexTuple& l, long n, std::uint64_t samples,
                         std::uint64_t seed);

}  // namespace haarint::mc

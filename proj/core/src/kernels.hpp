#pragma once

// Summation kernels shared by the transform and correlation modules.

#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "nega/zq.hpp"

namespace nega::detail {

// exp(pi i k / q) for k in [0, 2q) and exp(2 pi i k / q) for k in [0, q),
// each generated directly from its angle.
struct RootTables {
  std::vector<std::complex<double>> omega;
  std::vector<std::complex<double>> xi;

  explicit RootTables(Modulus q) {
    const int m = q.value();
    omega.resize(static_cast<std::size_t>(2 * m));
    xi.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < 2 * m; ++k) omega[static_cast<std::size_t>(k)] = std::polar(1.0, std::numbers::pi * k / m);
    for (int k = 0; k < m; ++k) xi[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
  }
};

// Histogram over k in [0, 2q) of the exponents
//   scale * g(x) + 2 <x,u> + wt(x)  (mod 2q),
// where scale is 1 for Z_2q-valued tables and 2 for Z_q-valued ones.
inline std::vector<std::int64_t> transform_exponents(const PointGrid& grid, std::span<const int> values, int scale,
                                                     std::size_t u) {
  const int order = grid.modulus().twice();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(order), 0);
  for (std::size_t x = 0; x < grid.size(); ++x) {
    const int e = (scale * values[x] + 2 * grid.dot(x, u) + grid.weight(x)) % order;
    ++counts[static_cast<std::size_t>(e)];
  }
  return counts;
}

// Histogram of f(x) - g(x + u) + q * carries(x, u)  (mod 2q).
inline std::vector<std::int64_t> correlation_exponents(const PointGrid& grid, std::span<const int> f,
                                                       std::span<const int> g, std::size_t u) {
  const int q = grid.modulus().value();
  const int order = 2 * q;
  std::vector<std::int64_t> counts(static_cast<std::size_t>(order), 0);
  for (std::size_t x = 0; x < grid.size(); ++x) {
    int carries = 0;
    const std::size_t shifted = grid.add(x, u, carries);
    int e = (f[x] - g[shifted] + q * (carries & 1)) % order;
    if (e < 0) e += order;
    ++counts[static_cast<std::size_t>(e)];
  }
  return counts;
}

}  // namespace nega::detail

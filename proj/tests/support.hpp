#pragma once

// Shared helpers for the test binaries. The oracles here evaluate the defining
// sums term by term through ZqPoint objects and std::exp, independent of the
// library's grids and root tables.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "nega/zq.hpp"

namespace nega::testing {

using cd = std::complex<double>;
using cld = std::complex<long double>;

inline cld unit(long double numerator, long double denominator) {
  const long double angle = std::numbers::pi_v<long double> * numerator / denominator;
  return {std::cos(angle), std::sin(angle)};
}

inline long long dot(const ZqPoint& a, const ZqPoint& b) {
  long long s = 0;
  for (int i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

// N_f(u) straight from the definition, w = exp(pi i/q), xi = exp(2 pi i/q).
inline cd direct_nht(const GenFunction& f, const ZqPoint& u) {
  const Modulus q = f.modulus();
  const int n = f.arity();
  cld sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const ZqPoint x = point_of(i, q, n);
    // w^{f(x)} * xi^{<x,u>} * w^{sum x}
    sum += unit(f[i], q.value()) * unit(2.0L * dot(x, u), q.value()) * unit(lift_sum(x), q.value());
  }
  const long double scale = std::pow(static_cast<long double>(q.value()), -0.5L * n);
  return cd(static_cast<double>(sum.real() * scale), static_cast<double>(sum.imag() * scale));
}

// N'_g(u) = q^{-n/2} sum xi^{g(x)} xi^{<x,u>} w^{sum x}.
inline cd direct_qary_nht(const QaryFunction& g, const ZqPoint& u) {
  const Modulus q = g.modulus();
  const int n = g.arity();
  cld sum = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const ZqPoint x = point_of(i, q, n);
    sum += unit(2.0L * g[i], q.value()) * unit(2.0L * dot(x, u), q.value()) * unit(lift_sum(x), q.value());
  }
  const long double scale = std::pow(static_cast<long double>(q.value()), -0.5L * n);
  return cd(static_cast<double>(sum.real() * scale), static_cast<double>(sum.imag() * scale));
}

// C_{f,g}(u) = sum_x w^{f(x) - g(x+u)} (-1)^{carries(x,u)}.
inline cd direct_ncc(const GenFunction& f, const GenFunction& g, const ZqPoint& u) {
  const Modulus q = f.modulus();
  const int n = f.arity();
  cld sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const ZqPoint x = point_of(i, q, n);
    const ZqPoint y = add_points(x, u);
    const long double sign = carry_count(x, u) % 2 == 0 ? 1.0L : -1.0L;
    sum += sign * unit(static_cast<long double>(f[i]) - g.at(y), q.value());
  }
  return cd(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

// sum_x xi^{<u,x>} w^{sum x_j}.
inline cd direct_character_sum(const ZqPoint& u) {
  const Modulus q = u.modulus();
  const int n = u.size();
  cld sum = 0;
  const std::size_t size = table_size(q, n);
  for (std::size_t i = 0; i < size; ++i) {
    const ZqPoint x = point_of(i, q, n);
    sum += unit(2.0L * dot(x, u), q.value()) * unit(lift_sum(x), q.value());
  }
  return cd(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

inline GenFunction random_gen(Modulus q, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, q.twice() - 1);
  std::vector<int> v(table_size(q, n));
  for (auto& x : v) x = d(rng);
  return GenFunction(q, n, std::move(v));
}

inline QaryFunction random_qary(Modulus q, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, q.value() - 1);
  std::vector<int> v(table_size(q, n));
  for (auto& x : v) x = d(rng);
  return QaryFunction(q, n, std::move(v));
}

inline ZqPoint random_point(Modulus q, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, q.value() - 1);
  std::vector<int> c(static_cast<std::size_t>(n));
  for (auto& x : c) x = d(rng);
  return ZqPoint(q, std::move(c));
}

// Function number `index` in lexicographic order of value tables (x = 0 most
// significant digit), the order the exhaustive search uses.
inline GenFunction nth_function(Modulus q, int n, std::uint64_t index) {
  std::vector<int> v(table_size(q, n));
  for (std::size_t k = v.size(); k-- > 0;) {
    v[k] = static_cast<int>(index % static_cast<std::uint64_t>(q.twice()));
    index /= static_cast<std::uint64_t>(q.twice());
  }
  return GenFunction(q, n, std::move(v));
}

inline std::uint64_t space_size(Modulus q, int n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < table_size(q, n); ++i) total *= static_cast<std::uint64_t>(q.twice());
  return total;
}

// Flat spectrum by direct summation, the independent negabent oracle.
inline bool direct_negabent(const GenFunction& f, double tol = 1e-9) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::abs(std::abs(direct_nht(f, point_of(i, f.modulus(), f.arity()))) - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace nega::testing

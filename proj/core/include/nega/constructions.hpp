#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "nega/cyclotomic.hpp"
#include "nega/zq.hpp"

namespace nega {

// g(x) = <a, x> + b over Z_q.
QaryFunction affine_qary(const ZqPoint& a, int b);

// sum x_i^2 - sum x_i (mod 2q) on n variables; negabent for every even q.
// Throws std::invalid_argument for odd q.
GenFunction even_quadratic(Modulus q, int n);

// 2 x_1 x_2 + x_1 (mod 2q) on two variables; negabent for every q >= 2.
GenFunction bilinear_two_var(Modulus q);

// f(x, y) = f1(x) + f2(y) (mod 2q) on r + s variables.
GenFunction direct_sum(const GenFunction& f1, const GenFunction& f2);

// Returns (sum_x w^{x^2}, sum_x w^{(x+a)^2}) with squares taken mod 2q and
// w = exp(pi i / q). For even q the two sums coincide. Pass allow_odd to
// evaluate an odd modulus anyway; otherwise odd q is rejected.
std::pair<CycloElement, CycloElement> shifted_square_sums(Modulus q, int a, bool allow_odd = false);

// h(x, y) = (1 + y) f(x) + y g(x) (mod 8) for f, g on n variables over Z_4,
// with y the new last coordinate.
GenFunction q4_extension(const GenFunction& f, const GenFunction& g);

// Outcome of a predicate that can be undecidable at a point.
enum class Check { pass, fail, indeterminate };

// Per-point diagnostics of the three slice conditions for h on n+1 variables
// over Z_4. h_j is the restriction of h with the last coordinate fixed to j,
// and w = (1 + i) / sqrt 2.
struct Q4PointRecord {
  ZqPoint u;
  std::array<std::complex<double>, 4> slices;  // N_{h_j}(u)
  // (i): |sum_j w^j N_{h_j}(u)|, expected 2.
  double weighted_magnitude = 0.0;
  Check weighted = Check::fail;
  // (ii): phi = (N0 - w^2 N2) / (w N1 - w^3 N3) must be real and
  // psi = (N0 + w^2 N2) / (i (w N1 + w^3 N3)) must be real.
  std::complex<double> phi{};
  std::complex<double> psi{};
  Check phi_real = Check::fail;
  Check psi_real = Check::fail;
  // (iii): sum_j |N_{h_j}(u)|^2 == 4 and the alternating conjugate sum
  // conj(N0) N2 - N0 conj(N2) + conj(N1) N3 - N1 conj(N3) == 0.
  double power_sum = 0.0;
  std::complex<double> alternating_sum{};
  Check power = Check::fail;
  Check alternating = Check::fail;

  Check ratios() const noexcept;
  Check power_conditions() const noexcept;
};

struct Q4ConditionsReport {
  int slice_arity = 0;  // n; h has n+1 variables
  std::vector<Q4PointRecord> points;
  // sum_j sum_u |N_{h_j}(u)|^2; equals 4 * 4^n for every h.
  double total_slice_power = 0.0;

  bool all_weighted() const noexcept;
  // Realness of phi and psi holds at every point where it is decidable.
  bool all_ratios_real() const noexcept;
  std::size_t indeterminate_ratio_points() const noexcept;
  bool all_power() const noexcept;
};

inline constexpr double kQ4Tolerance = 1e-8;
inline constexpr double kQ4DenominatorFloor = 1e-10;

Q4ConditionsReport q4_conditions(const GenFunction& h);

}  // namespace nega

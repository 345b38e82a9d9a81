#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "nega/cyclotomic.hpp"
#include "nega/zq.hpp"

namespace nega {

enum class Backend { exact, floating, both };

std::string_view to_string(Backend b) noexcept;
// Accepts "exact", "float" and "both".
std::optional<Backend> parse_backend(std::string_view name) noexcept;

inline constexpr double kDefaultFlatnessTolerance = 1e-9;
inline constexpr double kSnapTolerance = 1e-6;

// Transform values over every u, indexed like truth tables.
//
// exact[u] is the unnormalized sum T_f(u) = q^{n/2} N_f(u) as an element of
// order 2q; normalized[u] is N_f(u) in double precision. Either vector may be
// empty depending on the backend that produced the spectrum.
struct Spectrum {
  Modulus q;
  int n;
  std::vector<CycloElement> exact;
  std::vector<std::complex<double>> normalized;

  std::size_t size() const noexcept { return exact.empty() ? normalized.size() : exact.size(); }
  bool has_exact() const noexcept { return !exact.empty(); }
  bool has_float() const noexcept { return !normalized.empty(); }
};

// N_f(u) = q^{-n/2} sum_x w^{f(x)} xi^{<x,u>} w^{sum x_i}, w = exp(pi i/q), xi = w^2.
std::complex<double> nht(const GenFunction& f, const ZqPoint& u);
// q^{n/2} N_f(u) as an exact sum of 2q-th roots of unity.
CycloElement nht_exact(const GenFunction& f, const ZqPoint& u);
Spectrum full_spectrum(const GenFunction& f, Backend backend);

struct NegabentVerdict {
  bool negabent = false;
  // First u (in index order) where flatness fails.
  std::optional<ZqPoint> witness;
};

// Flat-spectrum test. The float route checks ||N_f(u)| - 1| <= tolerance; the
// exact route checks T conj(T) == q^n. Backend::both runs the two and throws
// std::logic_error if they disagree.
NegabentVerdict is_negabent(const GenFunction& f, Backend backend = Backend::exact,
                            double tolerance = kDefaultFlatnessTolerance);

// q-ary variant N'_g(u) = q^{-n/2} sum_x xi^{g(x)} xi^{<x,u>} w^{sum x_i}.
std::complex<double> qary_nht(const QaryFunction& g, const ZqPoint& u);
CycloElement qary_nht_exact(const QaryFunction& g, const ZqPoint& u);
std::vector<std::complex<double>> qary_spectrum(const QaryFunction& g);

// Classical nega-Hadamard transform of a Boolean function (q = 2):
// 2^{-n/2} sum_x (-1)^{f(x) + <x,u>} i^{wt(x)}.
std::complex<double> binary_nht(const QaryFunction& f, const ZqPoint& u);

struct InverseResult {
  // Recovered w^{f(x)} for every x.
  std::vector<std::complex<double>> units;
  // Present when every unit snapped to a 2q-th root of unity.
  std::optional<GenFunction> function;
  // Indices where snapping failed.
  std::vector<std::size_t> non_snapping;
};

// Inverse transform from the normalized spectrum.
InverseResult inverse_nht(const Spectrum& s);
// Inverse transform from the exact spectrum; throws std::invalid_argument if
// some point does not recover a single root of unity.
GenFunction inverse_nht_exact(const Spectrum& s);

// Closed form of sum_x xi^{<u,x>} w^{sum x_j}:
//   eta^{n(q-1) - 2 sum u_j} / prod_j sin((2 u_j + 1) pi / 2q),  eta = exp(pi i / 2q).
struct ClosedFormValue {
  double sine_product;
  // Exponent of eta, reduced into [0, 4q).
  int eta_exponent;
  std::complex<double> value;
};

ClosedFormValue closed_form_sum(const ZqPoint& u);

}  // namespace nega

#pragma once

#include <complex>
#include <vector>

#include "nega/cyclotomic.hpp"
#include "nega/transforms.hpp"
#include "nega/zq.hpp"

namespace nega {

// Nega-crosscorrelation
//   C_{f,g}(u) = sum_x w^{f(x) - g(x+u)} (-1)^{carries(x,u)}
// as an exact element of order 2q, and in double precision.
CycloElement ncc_exact(const GenFunction& f, const GenFunction& g, const ZqPoint& u);
std::complex<double> ncc(const GenFunction& f, const GenFunction& g, const ZqPoint& u);
CycloElement nac_exact(const GenFunction& f, const ZqPoint& u);
std::complex<double> nac(const GenFunction& f, const ZqPoint& u);

struct CorrelationTable {
  Modulus q;
  int n;
  std::vector<CycloElement> exact;
  std::vector<std::complex<double>> values;

  std::size_t size() const noexcept { return exact.empty() ? values.size() : exact.size(); }
};

CorrelationTable correlation_table(const GenFunction& f, const GenFunction& g, Backend backend);
CorrelationTable autocorrelation_table(const GenFunction& f, Backend backend);

// Negabent iff every nonzero shift has exactly vanishing autocorrelation.
// Scans shifts in index order and stops at the first nonzero one.
NegabentVerdict is_negabent_via_nac(const GenFunction& f);

// Both transform/correlation identities, checked exactly (scaled by q^n to
// stay inside Z[w_2q]) and in floating point:
//   forward:  sum_z C_{f,g}(z) w^{-wt(z)} xi^{-<u,z>} = q^n N_f(u) conj(N_g(u))
//   inverse:  C_{f,g}(z) = w^{wt(z)} sum_u N_f(u) conj(N_g(u)) xi^{<u,z>}
struct DualityReport {
  bool forward_exact = false;
  bool inverse_exact = false;
  double forward_max_error = 0.0;
  double inverse_max_error = 0.0;

  bool holds(double tolerance = 1e-8) const noexcept {
    return forward_exact && inverse_exact && forward_max_error <= tolerance && inverse_max_error <= tolerance;
  }
};

DualityReport duality_check(const GenFunction& f, const GenFunction& g);

// w^{wt(z)} sum_u |N_f(u)|^2 xi^{<u,z>}, the autocorrelation rebuilt from the
// power spectrum.
std::complex<double> nac_spectral_form(const Spectrum& s, const ZqPoint& z);
std::complex<double> nac_spectral_form(const GenFunction& f, const ZqPoint& z);

// The autocorrelation at the concatenated shift (u | w), assembled from
// crosscorrelations of the prefix restrictions:
//   sum_v C_{f_v, f_{v+u}}(w) (-1)^{carries(u,v)}.
CycloElement nac_via_restrictions(const GenFunction& f, const ZqPoint& u, const ZqPoint& w);

// C_f(u) + C_g(u) == 0 exactly for all u != 0.
bool complementary_nac(const GenFunction& f, const GenFunction& g);
// |N_f(u)|^2 + |N_g(u)|^2 == 2 for all u, within tolerance.
bool spectral_complement(const GenFunction& f, const GenFunction& g, double tolerance = 1e-8);

}  // namespace nega

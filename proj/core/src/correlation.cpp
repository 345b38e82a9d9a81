#include "nega/correlation.hpp"

#include <cmath>
#include <stdexcept>

#include "kernels.hpp"
#include "nega/parallel.hpp"

namespace nega {
namespace {

void require_pair(const GenFunction& f, const GenFunction& g) {
  if (f.modulus() != g.modulus()) throw std::invalid_argument("modulus mismatch");
  if (f.arity() != g.arity()) throw std::invalid_argument("arity mismatch");
}

void require_shift(const GenFunction& f, const ZqPoint& u) {
  if (u.modulus() != f.modulus() || u.size() != f.arity()) throw std::invalid_argument("shift does not match domain");
}

CycloElement exact_correlation(const PointGrid& grid, const GenFunction& f, const GenFunction& g, std::size_t u) {
  const auto counts = detail::correlation_exponents(grid, f.values(), g.values(), u);
  return CycloElement::from_counts(grid.modulus().twice(), counts);
}

std::complex<double> float_correlation(const PointGrid& grid, const detail::RootTables& roots, const GenFunction& f,
                                       const GenFunction& g, std::size_t u) {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t x = 0; x < grid.size(); ++x) {
    int carries = 0;
    const std::size_t shifted = grid.add(x, u, carries);
    const auto term = roots.omega[static_cast<std::size_t>(f[x])] * std::conj(roots.omega[static_cast<std::size_t>(g[shifted])]);
    acc += (carries & 1) ? -term : term;
  }
  return acc;
}

}  // namespace

CycloElement ncc_exact(const GenFunction& f, const GenFunction& g, const ZqPoint& u) {
  require_pair(f, g);
  require_shift(f, u);
  return exact_correlation(PointGrid(f.modulus(), f.arity()), f, g, index_of(u));
}

std::complex<double> ncc(const GenFunction& f, const GenFunction& g, const ZqPoint& u) {
  require_pair(f, g);
  require_shift(f, u);
  return float_correlation(PointGrid(f.modulus(), f.arity()), detail::RootTables(f.modulus()), f, g, index_of(u));
}

CycloElement nac_exact(const GenFunction& f, const ZqPoint& u) { return ncc_exact(f, f, u); }

std::complex<double> nac(const GenFunction& f, const ZqPoint& u) { return ncc(f, f, u); }

CorrelationTable correlation_table(const GenFunction& f, const GenFunction& g, Backend backend) {
  require_pair(f, g);
  const PointGrid grid(f.modulus(), f.arity());
  CorrelationTable table{f.modulus(), f.arity(), {}, {}};
  if (backend != Backend::floating) {
    table.exact.assign(grid.size(), CycloElement(f.modulus().twice()));
    detail::parallel_for(grid.size(), [&](std::size_t u) { table.exact[u] = exact_correlation(grid, f, g, u); });
  }
  if (backend != Backend::exact) {
    const detail::RootTables roots(f.modulus());
    table.values.resize(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t u) { table.values[u] = float_correlation(grid, roots, f, g, u); });
  }
  return table;
}

CorrelationTable autocorrelation_table(const GenFunction& f, Backend backend) {
  return correlation_table(f, f, backend);
}

NegabentVerdict is_negabent_via_nac(const GenFunction& f) {
  const PointGrid grid(f.modulus(), f.arity());
  for (std::size_t u = 1; u < grid.size(); ++u) {
    if (!exact_correlation(grid, f, f, u).is_zero()) {
      return NegabentVerdict{false, point_of(u, f.modulus(), f.arity())};
    }
  }
  return NegabentVerdict{true, std::nullopt};
}

DualityReport duality_check(const GenFunction& f, const GenFunction& g) {
  require_pair(f, g);
  const PointGrid grid(f.modulus(), f.arity());
  const std::size_t size = grid.size();
  const int order = f.modulus().twice();
  const detail::RootTables roots(f.modulus());
  const auto counts_order = static_cast<std::size_t>(order);

  const Spectrum sf = full_spectrum(f, Backend::both);
  const Spectrum sg = full_spectrum(g, Backend::both);
  const CorrelationTable c = correlation_table(f, g, Backend::both);

  std::vector<CycloElement> cross_exact;
  std::vector<std::complex<double>> cross_float(size);
  cross_exact.reserve(size);
  for (std::size_t u = 0; u < size; ++u) {
    cross_exact.push_back(sf.exact[u] * sg.exact[u].conjugate());
    cross_float[u] = sf.normalized[u] * std::conj(sg.normalized[u]);
  }
  BigInt volume;
  mpz_ui_pow_ui(volume.get_mpz_t(), static_cast<unsigned long>(f.modulus().value()), static_cast<unsigned long>(f.arity()));
  const double volume_d = volume.get_d();

  DualityReport report;
  report.forward_exact = true;
  report.inverse_exact = true;
  for (std::size_t u = 0; u < size; ++u) {
    CycloElement lhs(order);
    std::complex<double> lhs_float{0.0, 0.0};
    for (std::size_t z = 0; z < size; ++z) {
      const int dot = grid.dot(u, z);
      lhs += c.exact[z].rotated(-grid.weight(z) - 2LL * dot);
      lhs_float += c.values[z] * std::conj(roots.omega[static_cast<std::size_t>(grid.weight(z)) % counts_order]) *
                   std::conj(roots.xi[static_cast<std::size_t>(dot)]);
    }
    if (!equivalent(lhs, cross_exact[u])) report.forward_exact = false;
    report.forward_max_error = std::max(report.forward_max_error, std::abs(lhs_float - volume_d * cross_float[u]));
  }
  for (std::size_t z = 0; z < size; ++z) {
    CycloElement rhs(order);
    std::complex<double> rhs_float{0.0, 0.0};
    for (std::size_t u = 0; u < size; ++u) {
      const int dot = grid.dot(u, z);
      rhs += cross_exact[u].rotated(2LL * dot);
      rhs_float += cross_float[u] * roots.xi[static_cast<std::size_t>(dot)];
    }
    rhs = rhs.rotated(grid.weight(z));
    rhs_float *= roots.omega[static_cast<std::size_t>(grid.weight(z)) % counts_order];
    if (!equivalent(c.exact[z] * volume, rhs)) report.inverse_exact = false;
    report.inverse_max_error = std::max(report.inverse_max_error, std::abs(c.values[z] - rhs_float));
  }
  return report;
}

std::complex<double> nac_spectral_form(const Spectrum& s, const ZqPoint& z) {
  if (!s.has_float()) throw std::invalid_argument("nac_spectral_form needs the normalized spectrum");
  if (z.modulus() != s.q || z.size() != s.n) throw std::invalid_argument("shift does not match domain");
  const PointGrid grid(s.q, s.n);
  const detail::RootTables roots(s.q);
  const std::size_t zi = index_of(z);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t u = 0; u < grid.size(); ++u) {
    acc += std::norm(s.normalized[u]) * roots.xi[static_cast<std::size_t>(grid.dot(u, zi))];
  }
  return acc * roots.omega[static_cast<std::size_t>(grid.weight(zi) % s.q.twice())];
}

std::complex<double> nac_spectral_form(const GenFunction& f, const ZqPoint& z) {
  return nac_spectral_form(full_spectrum(f, Backend::floating), z);
}

CycloElement nac_via_restrictions(const GenFunction& f, const ZqPoint& u, const ZqPoint& w) {
  if (u.modulus() != f.modulus() || w.modulus() != f.modulus()) throw std::invalid_argument("modulus mismatch");
  const int r = u.size();
  if (r < 1 || r >= f.arity() || r + w.size() != f.arity()) {
    throw std::invalid_argument("split must satisfy 1 <= r <= n-1 and r + |w| = n");
  }
  const int q = f.modulus().value();
  CycloElement acc(f.modulus().twice());
  const std::size_t prefixes = table_size(f.modulus(), r);
  for (std::size_t vi = 0; vi < prefixes; ++vi) {
    const ZqPoint v = point_of(vi, f.modulus(), r);
    const GenFunction fv = restrict(f, v);
    const GenFunction fvu = restrict(f, add_points(v, u));
    CycloElement term = ncc_exact(fv, fvu, w);
    if (carry_count(u, v) & 1) term = term.rotated(q);
    acc += term;
  }
  return acc;
}

bool complementary_nac(const GenFunction& f, const GenFunction& g) {
  require_pair(f, g);
  const PointGrid grid(f.modulus(), f.arity());
  for (std::size_t u = 1; u < grid.size(); ++u) {
    if (!(exact_correlation(grid, f, f, u) + exact_correlation(grid, g, g, u)).is_zero()) return false;
  }
  return true;
}

bool spectral_complement(const GenFunction& f, const GenFunction& g, double tolerance) {
  require_pair(f, g);
  const Spectrum sf = full_spectrum(f, Backend::floating);
  const Spectrum sg = full_spectrum(g, Backend::floating);
  for (std::size_t u = 0; u < sf.size(); ++u) {
    if (std::abs(std::norm(sf.normalized[u]) + std::norm(sg.normalized[u]) - 2.0) > tolerance) return false;
  }
  return true;
}

}  // namespace nega

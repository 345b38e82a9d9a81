#include "nega/transforms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kernels.hpp"
#include "nega/parallel.hpp"

namespace nega {
namespace {

void require_domain(Modulus q, int n, const ZqPoint& u) {
  if (u.modulus() != q) throw std::invalid_argument("modulus mismatch");
  if (u.size() != n) throw std::invalid_argument("point length does not match arity");
}

double normalization(Modulus q, int n) { return std::pow(static_cast<double>(q.value()), -0.5 * n); }

BigInt power(int base, int exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

std::complex<double> float_transform(const PointGrid& grid, const detail::RootTables& roots, const GenFunction& f,
                                     std::size_t u) {
  const auto order = static_cast<std::size_t>(grid.modulus().twice());
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t x = 0; x < grid.size(); ++x) {
    acc += roots.omega[static_cast<std::size_t>(f[x])] * roots.xi[static_cast<std::size_t>(grid.dot(x, u))] *
           roots.omega[static_cast<std::size_t>(grid.weight(x)) % order];
  }
  return acc * normalization(grid.modulus(), grid.arity());
}

CycloElement exact_transform(const PointGrid& grid, const GenFunction& f, std::size_t u) {
  const auto counts = detail::transform_exponents(grid, f.values(), 1, u);
  return CycloElement::from_counts(grid.modulus().twice(), counts);
}

// Index of the 2q-th root of unity within tolerance of z, if any.
std::optional<int> snap_to_root(std::complex<double> z, Modulus q, double tolerance) {
  const int order = q.twice();
  const double turns = std::arg(z) * q.value() / std::numbers::pi;
  int k = static_cast<int>(std::lround(turns)) % order;
  if (k < 0) k += order;
  const auto root = std::polar(1.0, std::numbers::pi * k / q.value());
  if (std::abs(z - root) <= tolerance) return k;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Backend b) noexcept {
  switch (b) {
    case Backend::exact: return "exact";
    case Backend::floating: return "float";
    case Backend::both: return "both";
  }
  return "exact";
}

std::optional<Backend> parse_backend(std::string_view name) noexcept {
  if (name == "exact") return Backend::exact;
  if (name == "float") return Backend::floating;
  if (name == "both") return Backend::both;
  return std::nullopt;
}

std::complex<double> nht(const GenFunction& f, const ZqPoint& u) {
  require_domain(f.modulus(), f.arity(), u);
  const PointGrid grid(f.modulus(), f.arity());
  return float_transform(grid, detail::RootTables(f.modulus()), f, index_of(u));
}

CycloElement nht_exact(const GenFunction& f, const ZqPoint& u) {
  require_domain(f.modulus(), f.arity(), u);
  const PointGrid grid(f.modulus(), f.arity());
  return exact_transform(grid, f, index_of(u));
}

Spectrum full_spectrum(const GenFunction& f, Backend backend) {
  const PointGrid grid(f.modulus(), f.arity());
  Spectrum s{f.modulus(), f.arity(), {}, {}};
  if (backend != Backend::floating) {
    s.exact.assign(grid.size(), CycloElement(f.modulus().twice()));
    detail::parallel_for(grid.size(), [&](std::size_t u) { s.exact[u] = exact_transform(grid, f, u); });
  }
  if (backend != Backend::exact) {
    const detail::RootTables roots(f.modulus());
    s.normalized.resize(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t u) { s.normalized[u] = float_transform(grid, roots, f, u); });
  }
  return s;
}

NegabentVerdict is_negabent(const GenFunction& f, Backend backend, double tolerance) {
  const PointGrid grid(f.modulus(), f.arity());
  const auto witness = [&](std::size_t u) {
    return NegabentVerdict{false, point_of(u, f.modulus(), f.arity())};
  };

  NegabentVerdict exact_verdict{true, std::nullopt};
  if (backend != Backend::floating) {
    const BigInt expected = power(f.modulus().value(), f.arity());
    for (std::size_t u = 0; u < grid.size(); ++u) {
      const CycloElement t = exact_transform(grid, f, u);
      if (!(t * t.conjugate()).equals_integer(expected)) {
        exact_verdict = witness(u);
        break;
      }
    }
    if (backend == Backend::exact) return exact_verdict;
  }

  NegabentVerdict float_verdict{true, std::nullopt};
  const detail::RootTables roots(f.modulus());
  for (std::size_t u = 0; u < grid.size(); ++u) {
    if (std::abs(std::abs(float_transform(grid, roots, f, u)) - 1.0) > tolerance) {
      float_verdict = witness(u);
      break;
    }
  }
  if (backend == Backend::both && float_verdict.negabent != exact_verdict.negabent) {
    throw std::logic_error("exact and float negabent verdicts disagree");
  }
  return backend == Backend::both ? exact_verdict : float_verdict;
}

std::complex<double> qary_nht(const QaryFunction& g, const ZqPoint& u) {
  require_domain(g.modulus(), g.arity(), u);
  const PointGrid grid(g.modulus(), g.arity());
  const detail::RootTables roots(g.modulus());
  const auto order = static_cast<std::size_t>(g.modulus().twice());
  const std::size_t ui = index_of(u);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t x = 0; x < grid.size(); ++x) {
    acc += roots.xi[static_cast<std::size_t>(g[x])] * roots.xi[static_cast<std::size_t>(grid.dot(x, ui))] *
           roots.omega[static_cast<std::size_t>(grid.weight(x)) % order];
  }
  return acc * normalization(g.modulus(), g.arity());
}

CycloElement qary_nht_exact(const QaryFunction& g, const ZqPoint& u) {
  require_domain(g.modulus(), g.arity(), u);
  const PointGrid grid(g.modulus(), g.arity());
  const auto counts = detail::transform_exponents(grid, g.values(), 2, index_of(u));
  return CycloElement::from_counts(g.modulus().twice(), counts);
}

std::vector<std::complex<double>> qary_spectrum(const QaryFunction& g) {
  const std::size_t size = g.size();
  std::vector<std::complex<double>> out(size);
  detail::parallel_for(size, [&](std::size_t u) { out[u] = qary_nht(g, point_of(u, g.modulus(), g.arity())); });
  return out;
}

std::complex<double> binary_nht(const QaryFunction& f, const ZqPoint& u) {
  if (f.modulus().value() != 2) throw std::invalid_argument("binary_nht requires q = 2");
  require_domain(f.modulus(), f.arity(), u);
  static constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const PointGrid grid(f.modulus(), f.arity());
  const std::size_t ui = index_of(u);
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t x = 0; x < grid.size(); ++x) {
    const double sign = ((f[x] + grid.dot(x, ui)) & 1) ? -1.0 : 1.0;
    acc += sign * kIPowers[grid.weight(x) % 4];
  }
  return acc * normalization(f.modulus(), f.arity());
}

InverseResult inverse_nht(const Spectrum& s) {
  if (!s.has_float()) throw std::invalid_argument("inverse_nht needs the normalized spectrum");
  const PointGrid grid(s.q, s.n);
  if (s.normalized.size() != grid.size()) throw std::invalid_argument("incomplete spectrum");
  const detail::RootTables roots(s.q);
  const auto order = static_cast<std::size_t>(s.q.twice());
  const double scale = normalization(s.q, s.n);

  InverseResult result;
  result.units.resize(grid.size());
  std::vector<int> values(grid.size(), 0);
  for (std::size_t x = 0; x < grid.size(); ++x) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t u = 0; u < grid.size(); ++u) {
      acc += s.normalized[u] * std::conj(roots.xi[static_cast<std::size_t>(grid.dot(u, x))]);
    }
    const auto unit = scale * std::conj(roots.omega[static_cast<std::size_t>(grid.weight(x)) % order]) * acc;
    result.units[x] = unit;
    if (const auto k = snap_to_root(unit, s.q, kSnapTolerance)) {
      values[x] = *k;
    } else {
      result.non_snapping.push_back(x);
    }
  }
  if (result.non_snapping.empty()) result.function.emplace(s.q, s.n, std::move(values));
  return result;
}

GenFunction inverse_nht_exact(const Spectrum& s) {
  if (!s.has_exact()) throw std::invalid_argument("inverse_nht_exact needs the exact spectrum");
  const PointGrid grid(s.q, s.n);
  if (s.exact.size() != grid.size()) throw std::invalid_argument("incomplete spectrum");
  const int order = s.q.twice();
  const BigInt volume = power(s.q.value(), s.n);

  std::vector<int> values(grid.size(), 0);
  for (std::size_t x = 0; x < grid.size(); ++x) {
    // sum_u T(u) xi^{-<u,x>} = q^n w^{f(x)} w^{wt(x)}.
    CycloElement acc(order);
    for (std::size_t u = 0; u < grid.size(); ++u) acc += s.exact[u].rotated(-2LL * grid.dot(u, x));
    acc = acc.rotated(-grid.weight(x));
    std::optional<int> found;
    if (const auto guess = snap_to_root(acc.to_complex() / volume.get_d(), s.q, 1e-3)) {
      if (equivalent(acc, CycloElement::root_power(order, *guess) * volume)) found = guess;
    }
    for (int k = 0; !found && k < order; ++k) {
      if (equivalent(acc, CycloElement::root_power(order, k) * volume)) found = k;
    }
    if (!found) throw std::invalid_argument("spectrum does not invert to a function into Z_2q");
    values[x] = *found;
  }
  return GenFunction(s.q, s.n, std::move(values));
}

ClosedFormValue closed_form_sum(const ZqPoint& u) {
  const int q = u.modulus().value();
  const int n = u.size();
  double sine = 1.0;
  long long usum = 0;
  for (int c : u.coords()) {
    sine *= std::sin((2.0 * c + 1.0) * std::numbers::pi / (2.0 * q));
    usum += c;
  }
  const long long order = 4LL * q;
  long long e = (static_cast<long long>(n) * (q - 1) - 2 * usum) % order;
  if (e < 0) e += order;
  const auto eta_power = std::polar(1.0, std::numbers::pi * static_cast<double>(e) / (2.0 * q));
  return ClosedFormValue{sine, static_cast<int>(e), eta_power / sine};
}

}  // namespace nega

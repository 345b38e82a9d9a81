#include "nega/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nega/transforms.hpp"

namespace nega {

QaryFunction affine_qary(const ZqPoint& a, int b) {
  const Modulus q = a.modulus();
  const int n = a.size();
  const PointGrid grid(q, n);
  const int offset = lift(b, q);
  std::vector<int> values(grid.size());
  for (std::size_t x = 0; x < grid.size(); ++x) {
    long long acc = offset;
    const auto digits = grid.digits(x);
    for (int k = 0; k < n; ++k) acc += static_cast<long long>(a[k]) * digits[static_cast<std::size_t>(k)];
    values[x] = lift(acc, q);
  }
  return QaryFunction(q, n, std::move(values));
}

GenFunction even_quadratic(Modulus q, int n) {
  if (q.value() % 2 != 0) throw std::invalid_argument("the quadratic construction requires even q");
  const PointGrid grid(q, n);
  const Modulus target(q.twice());
  std::vector<int> values(grid.size());
  for (std::size_t x = 0; x < grid.size(); ++x) {
    long long acc = 0;
    for (int c : grid.digits(x)) acc += static_cast<long long>(c) * c - c;
    values[x] = lift(acc, target);
  }
  return GenFunction(q, n, std::move(values));
}

GenFunction bilinear_two_var(Modulus q) {
  const PointGrid grid(q, 2);
  const Modulus target(q.twice());
  std::vector<int> values(grid.size());
  for (std::size_t x = 0; x < grid.size(); ++x) {
    const auto d = grid.digits(x);
    values[x] = lift(2LL * d[0] * d[1] + d[0], target);
  }
  return GenFunction(q, 2, std::move(values));
}

GenFunction direct_sum(const GenFunction& f1, const GenFunction& f2) {
  if (f1.modulus() != f2.modulus()) throw std::invalid_argument("modulus mismatch");
  const int target = f1.target();
  std::vector<int> values;
  values.reserve(f1.size() * f2.size());
  for (int a : f1.values()) {
    for (int b : f2.values()) values.push_back((a + b) % target);
  }
  return GenFunction(f1.modulus(), f1.arity() + f2.arity(), std::move(values));
}

std::pair<CycloElement, CycloElement> shifted_square_sums(Modulus q, int a, bool allow_odd) {
  if (!allow_odd && q.value() % 2 != 0) throw std::invalid_argument("square-sum shift invariance requires even q");
  const int shift = lift(a, q);
  const int order = q.twice();
  CycloElement plain(order);
  CycloElement shifted(order);
  for (long long x = 0; x < q.value(); ++x) {
    plain.add_root_power((x * x) % order);
    shifted.add_root_power(((x + shift) * (x + shift)) % order);
  }
  return {std::move(plain), std::move(shifted)};
}

GenFunction q4_extension(const GenFunction& f, const GenFunction& g) {
  if (f.modulus().value() != 4 || g.modulus().value() != 4) throw std::invalid_argument("q4_extension requires q = 4");
  if (f.arity() != g.arity()) throw std::invalid_argument("arity mismatch");
  std::vector<int> values;
  values.reserve(f.size() * 4);
  for (std::size_t x = 0; x < f.size(); ++x) {
    for (int y = 0; y < 4; ++y) values.push_back(((1 + y) * f[x] + y * g[x]) % 8);
  }
  return GenFunction(f.modulus(), f.arity() + 1, std::move(values));
}

namespace {

Check from_bool(bool ok) { return ok ? Check::pass : Check::fail; }

Check combine(Check a, Check b) {
  if (a == Check::fail || b == Check::fail) return Check::fail;
  if (a == Check::indeterminate || b == Check::indeterminate) return Check::indeterminate;
  return Check::pass;
}

Check real_ratio(std::complex<double> num, std::complex<double> den, std::complex<double>& out) {
  if (std::abs(den) < kQ4DenominatorFloor) {
    out = {std::nan(""), std::nan("")};
    return Check::indeterminate;
  }
  out = num / den;
  return from_bool(std::abs(out.imag()) <= kQ4Tolerance * (1.0 + std::abs(out)));
}

}  // namespace

Check Q4PointRecord::ratios() const noexcept { return combine(phi_real, psi_real); }

Check Q4PointRecord::power_conditions() const noexcept { return combine(power, alternating); }

bool Q4ConditionsReport::all_weighted() const noexcept {
  for (const auto& p : points) {
    if (p.weighted != Check::pass) return false;
  }
  return true;
}

bool Q4ConditionsReport::all_ratios_real() const noexcept {
  for (const auto& p : points) {
    if (p.ratios() == Check::fail) return false;
  }
  return true;
}

std::size_t Q4ConditionsReport::indeterminate_ratio_points() const noexcept {
  std::size_t count = 0;
  for (const auto& p : points) count += p.ratios() == Check::indeterminate ? 1 : 0;
  return count;
}

bool Q4ConditionsReport::all_power() const noexcept {
  for (const auto& p : points) {
    if (p.power_conditions() != Check::pass) return false;
  }
  return true;
}

Q4ConditionsReport q4_conditions(const GenFunction& h) {
  if (h.modulus().value() != 4) throw std::invalid_argument("q4_conditions requires q = 4");
  if (h.arity() < 2) throw std::invalid_argument("q4_conditions requires at least two variables");
  const Modulus q = h.modulus();
  const int n = h.arity() - 1;

  std::array<Spectrum, 4> spectra{
      full_spectrum(restrict_trailing(h, ZqPoint(q, {0})), Backend::floating),
      full_spectrum(restrict_trailing(h, ZqPoint(q, {1})), Backend::floating),
      full_spectrum(restrict_trailing(h, ZqPoint(q, {2})), Backend::floating),
      full_spectrum(restrict_trailing(h, ZqPoint(q, {3})), Backend::floating),
  };
  std::array<std::complex<double>, 4> w;
  for (int j = 0; j < 4; ++j) w[static_cast<std::size_t>(j)] = std::polar(1.0, std::numbers::pi * j / 4.0);
  const std::complex<double> i_unit{0.0, 1.0};

  Q4ConditionsReport report;
  report.slice_arity = n;
  const std::size_t size = spectra[0].size();
  report.points.reserve(size);
  for (std::size_t u = 0; u < size; ++u) {
    Q4PointRecord r{.u = point_of(u, q, n), .slices = {}};
    for (std::size_t j = 0; j < 4; ++j) r.slices[j] = spectra[j].normalized[u];
    const auto& N = r.slices;

    std::complex<double> weighted{0.0, 0.0};
    for (std::size_t j = 0; j < 4; ++j) weighted += w[j] * N[j];
    r.weighted_magnitude = std::abs(weighted);
    r.weighted = from_bool(std::abs(r.weighted_magnitude - 2.0) <= kQ4Tolerance);

    r.phi_real = real_ratio(N[0] - w[2] * N[2], w[1] * N[1] - w[3] * N[3], r.phi);
    r.psi_real = real_ratio(N[0] + w[2] * N[2], i_unit * (w[1] * N[1] + w[3] * N[3]), r.psi);

    r.power_sum = 0.0;
    for (const auto& v : N) r.power_sum += std::norm(v);
    r.power = from_bool(std::abs(r.power_sum - 4.0) <= kQ4Tolerance);
    r.alternating_sum = std::conj(N[0]) * N[2] - N[0] * std::conj(N[2]) + std::conj(N[1]) * N[3] - N[1] * std::conj(N[3]);
    r.alternating = from_bool(std::abs(r.alternating_sum) <= kQ4Tolerance);

    report.total_slice_power += r.power_sum;
    report.points.push_back(std::move(r));
  }
  return report;
}

}  // namespace nega

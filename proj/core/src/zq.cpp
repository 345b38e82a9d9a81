#include "nega/zq.hpp"

#include <numeric>

namespace nega {

int lift(long long c, Modulus q) noexcept {
  const long long m = q.value();
  long long r = c % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

std::size_t table_size(Modulus q, int n) {
  if (n < 0) throw std::invalid_argument("negative arity");
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::size_t>(q.value());
    if (size > kMaxTableSize) throw std::length_error("q^n exceeds the supported table size");
  }
  return size;
}

ZqPoint::ZqPoint(Modulus q, std::vector<int> coords) : q_(q), coords_(std::move(coords)) {
  for (int c : coords_) {
    if (c < 0 || c >= q.value()) throw std::invalid_argument("point coordinate outside [0, q)");
  }
}

ZqPoint ZqPoint::from_signed(Modulus q, std::span<const long long> coords) {
  std::vector<int> out;
  out.reserve(coords.size());
  for (long long c : coords) out.push_back(lift(c, q));
  return ZqPoint(q, std::move(out));
}

std::size_t index_of(const ZqPoint& p) {
  const auto q = static_cast<std::size_t>(p.modulus().value());
  std::size_t index = 0;
  for (int c : p.coords()) index = index * q + static_cast<std::size_t>(c);
  return index;
}

ZqPoint point_of(std::size_t index, Modulus q, int n) {
  if (index >= table_size(q, n)) throw std::out_of_range("point index out of range");
  std::vector<int> coords(static_cast<std::size_t>(n));
  const auto m = static_cast<std::size_t>(q.value());
  for (int k = n - 1; k >= 0; --k) {
    coords[static_cast<std::size_t>(k)] = static_cast<int>(index % m);
    index /= m;
  }
  return ZqPoint(q, std::move(coords));
}

namespace {

void require_same_shape(const ZqPoint& x, const ZqPoint& y) {
  if (x.modulus() != y.modulus()) throw std::invalid_argument("modulus mismatch");
  if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
}

}  // namespace

int carry_count(const ZqPoint& x, const ZqPoint& u) {
  require_same_shape(x, u);
  const int q = x.modulus().value();
  int carries = 0;
  for (int i = 0; i < x.size(); ++i) carries += (x[i] + u[i] >= q) ? 1 : 0;
  return carries;
}

ZqPoint add_points(const ZqPoint& x, const ZqPoint& y) {
  require_same_shape(x, y);
  const int q = x.modulus().value();
  std::vector<int> out(static_cast<std::size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) {
    const int s = x[i] + y[i];
    out[static_cast<std::size_t>(i)] = s >= q ? s - q : s;
  }
  return ZqPoint(x.modulus(), std::move(out));
}

long long lift_sum(const ZqPoint& x) noexcept {
  return std::accumulate(x.coords().begin(), x.coords().end(), 0LL);
}

ZqPoint concat(const ZqPoint& u, const ZqPoint& w) {
  if (u.modulus() != w.modulus()) throw std::invalid_argument("modulus mismatch");
  std::vector<int> out(u.coords().begin(), u.coords().end());
  out.insert(out.end(), w.coords().begin(), w.coords().end());
  return ZqPoint(u.modulus(), std::move(out));
}

GenFunction restrict(const GenFunction& f, const ZqPoint& prefix) {
  if (prefix.modulus() != f.modulus()) throw std::invalid_argument("modulus mismatch");
  const int r = prefix.size();
  if (r < 1 || r >= f.arity()) throw std::invalid_argument("restriction prefix length must be in [1, n-1]");
  const std::size_t block = table_size(f.modulus(), f.arity() - r);
  const std::size_t offset = index_of(prefix) * block;
  const auto values = f.values().subspan(offset, block);
  return GenFunction(f.modulus(), f.arity() - r, std::vector<int>(values.begin(), values.end()));
}

GenFunction restrict_trailing(const GenFunction& f, const ZqPoint& suffix) {
  if (suffix.modulus() != f.modulus()) throw std::invalid_argument("modulus mismatch");
  const int r = suffix.size();
  if (r < 1 || r >= f.arity()) throw std::invalid_argument("restriction suffix length must be in [1, n-1]");
  const std::size_t stride = table_size(f.modulus(), r);
  const std::size_t count = table_size(f.modulus(), f.arity() - r);
  const std::size_t offset = index_of(suffix);
  std::vector<int> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = f[i * stride + offset];
  return GenFunction(f.modulus(), f.arity() - r, std::move(values));
}

GenFunction add_constant(const GenFunction& f, int c) {
  const int target = f.target();
  const int shift = lift(c, Modulus(target));
  std::vector<int> values(f.values().begin(), f.values().end());
  for (int& v : values) v = (v + shift) % target;
  return GenFunction(f.modulus(), f.arity(), std::move(values));
}

PointGrid::PointGrid(Modulus q, int n) : q_(q), n_(n), size_(table_size(q, n)) {
  if (n < 1) throw std::invalid_argument("grid needs at least one variable");
  const auto width = static_cast<std::size_t>(n);
  digits_.assign(size_ * width, 0);
  weights_.assign(size_, 0);
  // Mixed-radix counter; the last coordinate varies fastest.
  std::vector<int> counter(width, 0);
  int weight = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    std::copy(counter.begin(), counter.end(), digits_.begin() + static_cast<std::ptrdiff_t>(i * width));
    weights_[i] = weight;
    for (std::size_t k = width; k-- > 0;) {
      if (++counter[k] < q.value()) {
        ++weight;
        break;
      }
      counter[k] = 0;
      weight -= q.value() - 1;
    }
  }
}

int PointGrid::dot(std::size_t x, std::size_t u) const noexcept {
  const auto dx = digits(x);
  const auto du = digits(u);
  long long acc = 0;
  for (int k = 0; k < n_; ++k) acc += static_cast<long long>(dx[k]) * du[k];
  return static_cast<int>(acc % q_.value());
}

std::size_t PointGrid::add(std::size_t x, std::size_t u, int& carries) const noexcept {
  const auto dx = digits(x);
  const auto du = digits(u);
  const int q = q_.value();
  std::size_t index = 0;
  carries = 0;
  for (int k = 0; k < n_; ++k) {
    int s = dx[k] + du[k];
    if (s >= q) {
      s -= q;
      ++carries;
    }
    index = index * static_cast<std::size_t>(q) + static_cast<std::size_t>(s);
  }
  return index;
}

}  // namespace nega

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace nega {

// Largest truth table we agree to allocate. Spectra are O(size^2), so anything
// near this bound is already far outside desk scale.
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 26;

class Modulus {
 public:
  explicit Modulus(int q) : q_(q) {
    if (q < 2) throw std::invalid_argument("modulus q must be >= 2");
  }

  int value() const noexcept { return q_; }
  // Order of the target ring Z_2q.
  int twice() const noexcept { return 2 * q_; }

  friend bool operator==(Modulus, Modulus) = default;

 private:
  int q_;
};

// Canonical residue of c modulo q, in [0, q).
int lift(long long c, Modulus q) noexcept;

// q^n, throwing std::length_error when it exceeds kMaxTableSize.
std::size_t table_size(Modulus q, int n);

// A point of Z_q^n stored as canonical residues, so the integer lift is the
// identity on coords().
class ZqPoint {
 public:
  ZqPoint(Modulus q, std::vector<int> coords);

  // Reduces arbitrary (possibly negative) integers via lift().
  static ZqPoint from_signed(Modulus q, std::span<const long long> coords);
  static ZqPoint zero(Modulus q, int n) { return ZqPoint(q, std::vector<int>(static_cast<std::size_t>(n), 0)); }

  Modulus modulus() const noexcept { return q_; }
  int size() const noexcept { return static_cast<int>(coords_.size()); }
  std::span<const int> coords() const noexcept { return coords_; }
  int operator[](int i) const { return coords_.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const ZqPoint&, const ZqPoint&) = default;

 private:
  Modulus q_;
  std::vector<int> coords_;
};

// Row-major index with x_1 most significant.
std::size_t index_of(const ZqPoint& p);
ZqPoint point_of(std::size_t index, Modulus q, int n);

// Number of coordinates where x_i + u_i overflows q.
int carry_count(const ZqPoint& x, const ZqPoint& u);
ZqPoint add_points(const ZqPoint& x, const ZqPoint& y);
long long lift_sum(const ZqPoint& x) noexcept;
ZqPoint concat(const ZqPoint& u, const ZqPoint& w);

namespace detail {

// Truth table over Z_q^n with entries in [0, Range * q).
template <int Range>
class TruthTable {
 public:
  TruthTable(Modulus q, int n, std::vector<int> values) : q_(q), n_(n), values_(std::move(values)) {
    if (n < 1) throw std::invalid_argument("functions need at least one variable");
    if (values_.size() != table_size(q, n)) throw std::invalid_argument("truth table length must be q^n");
    const int bound = Range * q.value();
    for (int v : values_) {
      if (v < 0 || v >= bound) throw std::invalid_argument("truth table entry out of range");
    }
  }

  Modulus modulus() const noexcept { return q_; }
  int arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size(); }
  // Values live in Z_target.
  int target() const noexcept { return Range * q_.value(); }
  std::span<const int> values() const noexcept { return values_; }
  int operator[](std::size_t index) const { return values_[index]; }
  int at(const ZqPoint& x) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  Modulus q_;
  int n_;
  std::vector<int> values_;
};

template <int Range>
int TruthTable<Range>::at(const ZqPoint& x) const {
  if (x.modulus() != q_ || x.size() != n_) throw std::invalid_argument("point does not match function domain");
  return values_[index_of(x)];
}

}  // namespace detail

// f : Z_q^n -> Z_2q.
using GenFunction = detail::TruthTable<2>;
// g : Z_q^n -> Z_q.
using QaryFunction = detail::TruthTable<1>;

// f_v(x) = f(v, x) for a prefix v of length 1..n-1.
GenFunction restrict(const GenFunction& f, const ZqPoint& prefix);
// f(x, v) for a suffix v of length 1..n-1.
GenFunction restrict_trailing(const GenFunction& f, const ZqPoint& suffix);
// f + c mod 2q.
GenFunction add_constant(const GenFunction& f, int c);

// Digit and weight tables for every point of Z_q^n, shared by the summation
// loops so they never rebuild ZqPoint objects.
class PointGrid {
 public:
  PointGrid(Modulus q, int n);

  Modulus modulus() const noexcept { return q_; }
  int arity() const noexcept { return n_; }
  std::size_t size() const noexcept { return size_; }
  std::span<const int> digits(std::size_t index) const noexcept {
    return {digits_.data() + index * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  int weight(std::size_t index) const noexcept { return weights_[index]; }
  // <x, u> mod q.
  int dot(std::size_t x, std::size_t u) const noexcept;
  // Index of x + u and the carry count of the addition.
  std::size_t add(std::size_t x, std::size_t u, int& carries) const noexcept;

 private:
  Modulus q_;
  int n_;
  std::size_t size_;
  std::vector<int> digits_;
  std::vector<int> weights_;
};

}  // namespace nega

#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nega {

using BigInt = mpz_class;

inline constexpr int kMaxCyclotomicOrder = 10000;

// The m-th cyclotomic polynomial, coefficients from x^0 upwards. Monic of
// degree phi(m).
class CyclotomicPolynomial {
 public:
  CyclotomicPolynomial(int order, std::vector<BigInt> coeffs) : order_(order), coeffs_(std::move(coeffs)) {}

  int order() const noexcept { return order_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

 private:
  int order_;
  std::vector<BigInt> coeffs_;
};

// Memoized; safe to call from several threads at once. The returned reference
// stays valid for the life of the process.
const CyclotomicPolynomial& cyclotomic_poly(int m);

// Integer combination sum_k coeffs[k] * w_m^k of m-th roots of unity with
// w_m = exp(2 pi i / m), living in the group ring Z[x]/(x^m - 1).
//
// The representation is not canonical: distinct coefficient vectors can name
// the same complex number. Value comparisons go through is_zero(), which
// reduces modulo Phi_m.
class CycloElement {
 public:
  // The zero element of order m.
  explicit CycloElement(int order);

  static CycloElement root_power(int m, long long k);
  static CycloElement integer(int m, const BigInt& c);
  static CycloElement one(int m) { return root_power(m, 0); }
  // sum_k counts[k] * w_m^k, with counts.size() == m.
  static CycloElement from_counts(int m, std::span<const std::int64_t> counts);

  int order() const noexcept { return static_cast<int>(coeffs_.size()); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

  // Adds c * w_m^k in place.
  void add_root_power(long long k, const BigInt& c = 1);

  // Reinterprets the element at order target (a multiple of order()):
  // coefficient k moves to k * target / order().
  CycloElement embed(int target) const;
  // Multiplies by w_m^k.
  CycloElement rotated(long long k) const;
  CycloElement conjugate() const;

  // Remainder of the coefficient polynomial modulo Phi_m, length phi(m).
  std::vector<BigInt> reduced() const;
  bool is_zero() const;
  // The rational integer this element equals, if it is one.
  std::optional<BigInt> as_integer() const;
  bool equals_integer(const BigInt& c) const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

  CycloElement& operator+=(const CycloElement& other);
  CycloElement& operator-=(const CycloElement& other);
  CycloElement& operator*=(const BigInt& scalar);
  CycloElement operator-() const;

  friend CycloElement operator+(CycloElement a, const CycloElement& b) { return a += b; }
  friend CycloElement operator-(CycloElement a, const CycloElement& b) { return a -= b; }
  friend CycloElement operator*(const CycloElement& a, const CycloElement& b);
  friend CycloElement operator*(CycloElement a, const BigInt& s) { return a *= s; }

 private:
  std::vector<BigInt> coeffs_;
};

// Same numeric value, decided exactly.
bool equivalent(const CycloElement& a, const CycloElement& b);
// Same coefficient vector.
bool same_representation(const CycloElement& a, const CycloElement& b);

}  // namespace nega

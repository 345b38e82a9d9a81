#include "nega/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace nega {
namespace {

using Poly = std::vector<BigInt>;

// In-place reduction of num modulo the monic polynomial den. Returns the
// quotient; num keeps the remainder in its low deg(den) slots.
Poly divide_monic(Poly& num, const Poly& den) {
  const int d = static_cast<int>(den.size()) - 1;
  const int top = static_cast<int>(num.size()) - 1;
  if (top < d) return {};
  std::vector<int> support;
  for (int i = 0; i < d; ++i) {
    if (den[static_cast<std::size_t>(i)] != 0) support.push_back(i);
  }
  Poly quotient(static_cast<std::size_t>(top - d + 1));
  for (int k = top; k >= d; --k) {
    BigInt& lead = num[static_cast<std::size_t>(k)];
    if (lead == 0) continue;
    quotient[static_cast<std::size_t>(k - d)] = lead;
    for (int i : support) {
      mpz_submul(num[static_cast<std::size_t>(k - d + i)].get_mpz_t(), lead.get_mpz_t(),
                 den[static_cast<std::size_t>(i)].get_mpz_t());
    }
    lead = 0;
  }
  return quotient;
}

struct CyclotomicCache {
  std::mutex mutex;
  std::map<int, std::unique_ptr<CyclotomicPolynomial>> table;

  // Caller holds mutex.
  const CyclotomicPolynomial& get_locked(int m) {
    if (auto it = table.find(m); it != table.end()) return *it->second;
    Poly poly(static_cast<std::size_t>(m) + 1);
    poly.front() = -1;
    poly.back() = 1;
    for (int d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const auto& divisor = get_locked(d).coeffs();
      Poly quotient = divide_monic(poly, divisor);
      for (std::size_t i = 0; i + 1 < divisor.size(); ++i) {
        if (poly[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
      }
      poly = std::move(quotient);
    }
    auto entry = std::make_unique<CyclotomicPolynomial>(m, std::move(poly));
    const auto& ref = *entry;
    table.emplace(m, std::move(entry));
    return ref;
  }
};

CyclotomicCache& cache() {
  static CyclotomicCache instance;
  return instance;
}

int reduce_exponent(long long k, int m) {
  long long r = k % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

void require_same_order(const CycloElement& a, const CycloElement& b) {
  if (a.order() != b.order()) throw std::invalid_argument("cyclotomic order mismatch; embed explicitly");
}

}  // namespace

const CyclotomicPolynomial& cyclotomic_poly(int m) {
  if (m < 1 || m > kMaxCyclotomicOrder) throw std::out_of_range("cyclotomic order out of range");
  auto& c = cache();
  std::lock_guard lock(c.mutex);
  return c.get_locked(m);
}

CycloElement::CycloElement(int order) {
  if (order < 1 || order > kMaxCyclotomicOrder) throw std::out_of_range("cyclotomic order out of range");
  coeffs_.resize(static_cast<std::size_t>(order));
}

CycloElement CycloElement::root_power(int m, long long k) {
  CycloElement out(m);
  out.coeffs_[static_cast<std::size_t>(reduce_exponent(k, m))] = 1;
  return out;
}

CycloElement CycloElement::integer(int m, const BigInt& c) {
  CycloElement out(m);
  out.coeffs_[0] = c;
  return out;
}

CycloElement CycloElement::from_counts(int m, std::span<const std::int64_t> counts) {
  if (counts.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("count vector length must equal the order");
  CycloElement out(m);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    out.coeffs_[k] = static_cast<long>(counts[k]);
  }
  return out;
}

void CycloElement::add_root_power(long long k, const BigInt& c) {
  coeffs_[static_cast<std::size_t>(reduce_exponent(k, order()))] += c;
}

CycloElement CycloElement::embed(int target) const {
  const int m = order();
  if (target < m || target % m != 0) throw std::invalid_argument("embedding target must be a multiple of the order");
  const int step = target / m;
  CycloElement out(target);
  for (int k = 0; k < m; ++k) out.coeffs_[static_cast<std::size_t>(k * step)] = coeffs_[static_cast<std::size_t>(k)];
  return out;
}

CycloElement CycloElement::rotated(long long k) const {
  const int m = order();
  const int shift = reduce_exponent(k, m);
  CycloElement out(m);
  for (int i = 0; i < m; ++i) out.coeffs_[static_cast<std::size_t>((i + shift) % m)] = coeffs_[static_cast<std::size_t>(i)];
  return out;
}

CycloElement CycloElement::conjugate() const {
  const int m = order();
  CycloElement out(m);
  for (int k = 0; k < m; ++k) out.coeffs_[static_cast<std::size_t>((m - k) % m)] = coeffs_[static_cast<std::size_t>(k)];
  return out;
}

std::vector<BigInt> CycloElement::reduced() const {
  const auto& phi = cyclotomic_poly(order()).coeffs();
  Poly work = coeffs_;
  divide_monic(work, phi);
  work.resize(phi.size() - 1);
  return work;
}

bool CycloElement::is_zero() const {
  bool all_zero = true;
  for (const auto& c : coeffs_) {
    if (c != 0) {
      all_zero = false;
      break;
    }
  }
  if (all_zero) return true;
  for (const auto& c : reduced()) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<BigInt> CycloElement::as_integer() const {
  const auto r = reduced();
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (r[k] != 0) return std::nullopt;
  }
  return r[0];
}

bool CycloElement::equals_integer(const BigInt& c) const {
  CycloElement diff = *this;
  diff.coeffs_[0] -= c;
  return diff.is_zero();
}

std::complex<double> CycloElement::to_complex() const {
  const int m = order();
  std::complex<double> acc{0.0, 0.0};
  for (int k = 0; k < m; ++k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    acc += c.get_d() * std::polar(1.0, 2.0 * std::numbers::pi * k / m);
  }
  return acc;
}

std::string CycloElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < order(); ++k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const BigInt mag = abs(c);
    if (k == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "w" << order() << "^" << k;
    }
  }
  return first ? "0" : os.str();
}

CycloElement& CycloElement::operator+=(const CycloElement& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& other) {
  require_same_order(*this, other);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

CycloElement& CycloElement::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CycloElement CycloElement::operator-() const {
  CycloElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloElement operator*(const CycloElement& a, const CycloElement& b) {
  require_same_order(a, b);
  const int m = a.order();
  CycloElement out(m);
  std::vector<int> support_b;
  for (int j = 0; j < m; ++j) {
    if (b.coeffs_[static_cast<std::size_t>(j)] != 0) support_b.push_back(j);
  }
  for (int i = 0; i < m; ++i) {
    const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    for (int j : support_b) {
      const int k = (i + j) % m;
      mpz_addmul(out.coeffs_[static_cast<std::size_t>(k)].get_mpz_t(), ai.get_mpz_t(),
                 b.coeffs_[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  return out;
}

bool equivalent(const CycloElement& a, const CycloElement& b) { return (a - b).is_zero(); }

bool same_representation(const CycloElement& a, const CycloElement& b) {
  return a.order() == b.order() && a.coeffs() == b.coeffs();
}

}  // namespace nega

#include "nega/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

#include "nega/correlation.hpp"
#include "nega/polyspec.hpp"

namespace nega {
namespace {

using ordered_json = nlohmann::ordered_json;

std::optional<int> snap_to_eta(std::complex<double> z, Modulus q) {
  const int order = 4 * q.value();
  const double turns = std::arg(z) * order / (2.0 * std::numbers::pi);
  int k = static_cast<int>(std::lround(turns)) % order;
  if (k < 0) k += order;
  const auto root = std::polar(1.0, 2.0 * std::numbers::pi * k / order);
  if (std::abs(z - root) <= kSnapTolerance) return k;
  return std::nullopt;
}

long long to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("catalog integer does not fit in 64 bits");
  return v.get_si();
}

}  // namespace

BigInt candidate_count(Modulus q, int n) {
  BigInt total;
  const std::size_t points = table_size(q, n);
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(q.twice()), static_cast<unsigned long>(points));
  return total;
}

SearchSpace::SearchSpace(Modulus q, int n, std::uint64_t ceiling) : q_(q), n_(n), total_(0) {
  if (n < 1) throw std::invalid_argument("search space needs at least one variable");
  // (2q)^(q^n) >= 4^(q^n); anything past 32 points overflows 64 bits.
  std::size_t points = 1;
  for (int i = 0; i < n; ++i) {
    points *= static_cast<std::size_t>(q.value());
    if (points > 32) throw InfeasibleSpace("search space (2q)^(q^n) exceeds 64-bit candidate indices");
  }
  const BigInt total = candidate_count(q, n);
  if (total > BigInt(std::to_string(ceiling))) {
    throw InfeasibleSpace("search space has " + total.get_str() + " candidates, above the ceiling of " +
                          std::to_string(ceiling));
  }
  if (!total.fits_ulong_p()) throw InfeasibleSpace("search space exceeds 64-bit candidate indices");
  total_ = total.get_ui();
}

std::pair<std::uint64_t, std::uint64_t> SearchSpace::range(Shard shard) const {
  if (shard.count == 0 || shard.index >= shard.count) throw std::invalid_argument("shard index out of range");
  // floor(total * k / count) without overflowing the product.
  const std::uint64_t count = shard.count;
  const auto scaled = [&](std::uint64_t k) {
    return total_ / count * k + (total_ % count) * k / count;
  };
  return {scaled(shard.index), scaled(shard.index + 1)};
}

std::uint64_t candidate_index(const GenFunction& f) {
  const auto base = static_cast<std::uint64_t>(f.target());
  std::uint64_t index = 0;
  for (int v : f.values()) index = index * base + static_cast<std::uint64_t>(v);
  return index;
}

Enumerator::Enumerator(const SearchSpace& space, Shard shard)
    : q_(space.modulus()), n_(space.arity()), index_(0), end_(0), digits_(table_size(space.modulus(), space.arity()), 0) {
  const auto [begin, end] = space.range(shard);
  index_ = begin;
  end_ = end;
  std::uint64_t rest = begin;
  const auto base = static_cast<std::uint64_t>(q_.twice());
  for (std::size_t k = digits_.size(); k-- > 0;) {
    digits_[k] = static_cast<int>(rest % base);
    rest /= base;
  }
}

bool Enumerator::next() {
  if (!started_) {
    started_ = true;
    return index_ < end_;
  }
  if (index_ >= end_) return false;
  ++index_;
  if (index_ >= end_) return false;
  const int base = q_.twice();
  for (std::size_t k = digits_.size(); k-- > 0;) {
    if (++digits_[k] < base) break;
    digits_[k] = 0;
  }
  return true;
}

GenFunction Enumerator::current() const { return GenFunction(q_, n_, digits_); }

CatalogRecord classify(const GenFunction& f, const SearchOptions& options) {
  CatalogRecord r{f.modulus(), f.arity(), candidate_index(f), std::vector<int>(f.values().begin(), f.values().end()),
                  false, {}, {}};
  std::optional<bool> exact;
  std::optional<bool> flat;
  if (options.backend != Backend::floating) exact = is_negabent_via_nac(f).negabent;
  if (options.backend != Backend::exact) flat = is_negabent(f, Backend::floating, options.tolerance).negabent;
  if (exact && flat && *exact != *flat) {
    throw BackendDisagreement("exact and float verdicts disagree on candidate " + std::to_string(r.index));
  }
  r.negabent = exact ? *exact : *flat;
  if (!r.negabent) return r;

  const Spectrum s = full_spectrum(f, Backend::both);
  r.tsq.reserve(s.size());
  r.phases.reserve(s.size());
  for (std::size_t u = 0; u < s.size(); ++u) {
    const auto value = (s.exact[u] * s.exact[u].conjugate()).as_integer();
    if (!value) throw BackendDisagreement("flat candidate with a non-integral |T|^2");
    r.tsq.push_back(*value);
    r.phases.push_back(snap_to_eta(s.normalized[u], f.modulus()));
  }
  return r;
}

std::vector<CatalogRecord> search_shard(const SearchSpace& space, Shard shard, const SearchOptions& options) {
  std::vector<CatalogRecord> out;
  Enumerator e(space, shard);
  while (e.next()) {
    auto r = classify(e.current(), options);
    if (options.hits_only && !r.negabent) continue;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CatalogRecord> search_negabent(const SearchSpace& space, std::size_t shards, const SearchOptions& options) {
  if (shards == 0) throw std::invalid_argument("need at least one shard");
  std::vector<std::vector<CatalogRecord>> parts(shards);
  std::vector<std::exception_ptr> errors(shards);
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t wave = 0; wave < shards; wave += hw) {
    std::vector<std::thread> pool;
    for (std::size_t i = wave; i < std::min(shards, wave + hw); ++i) {
      pool.emplace_back([&, i] {
        try {
          parts[i] = search_shard(space, Shard{i, shards}, options);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  std::vector<CatalogRecord> merged;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(merged));
  std::stable_sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
  return merged;
}

std::string to_catalog_line(const CatalogRecord& r) {
  ordered_json j;
  j["q"] = r.q.value();
  j["n"] = r.n;
  j["values"] = r.values;
  j["negabent"] = r.negabent;
  if (r.negabent) {
    auto tsq = ordered_json::array();
    for (const auto& v : r.tsq) tsq.push_back(to_int64(v));
    j["tsq"] = std::move(tsq);
    auto phases = ordered_json::array();
    for (const auto& p : r.phases) phases.push_back(p ? ordered_json(*p) : ordered_json(nullptr));
    j["phases"] = std::move(phases);
  }
  return j.dump();
}

CatalogRecord parse_catalog_line(std::string_view line) {
  const auto j = nlohmann::json::parse(line);
  const Modulus q(j.at("q").get<int>());
  const int n = j.at("n").get<int>();
  GenFunction f(q, n, j.at("values").get<std::vector<int>>());
  CatalogRecord r{q, n, candidate_index(f), std::vector<int>(f.values().begin(), f.values().end()),
                  j.at("negabent").get<bool>(), {}, {}};
  if (j.contains("tsq")) {
    for (const auto& v : j["tsq"]) r.tsq.emplace_back(static_cast<long>(v.get<long long>()));
  }
  if (j.contains("phases")) {
    for (const auto& p : j["phases"]) r.phases.push_back(p.is_null() ? std::nullopt : std::optional<int>(p.get<int>()));
  }
  return r;
}

std::vector<std::string> merge_catalog_lines(const std::vector<std::vector<std::string>>& shards) {
  std::map<std::uint64_t, std::string> ordered;
  for (const auto& shard : shards) {
    for (const auto& line : shard) {
      if (line.empty()) continue;
      ordered.emplace(parse_catalog_line(line).index, line);
    }
  }
  std::vector<std::string> out;
  out.reserve(ordered.size());
  for (auto& [index, line] : ordered) out.push_back(std::move(line));
  return out;
}

std::vector<ExampleItem> example_catalog() {
  return {
      {"ex1.i", "x1^2 + x2^2 + x3^2 - x1 - x2 - x3", 3, {4}},
      {"ex1.ii", "x1^2 + x2^2 + x3^2 + x4^2 - x1 - x2 - x3 - x4", 4, {6}},
      {"ex2", "2*x1*x2 + x1", 2, {3}},
      {"ex3.1", "x1^2 + x2^2 + x3^2", 3, {3, 5, 7}},
      {"ex3.2", "x1^2 + x2^2 + x3^2 + x4^2", 4, {3, 5}},
      {"ex3.3", "x1^2 + x2^2 + x3^2 + x4^2 + 2*x1*x2 + 2*x3*x4 + 2*x2*x4", 4, {2, 3, 5, 7, 9}},
      {"ex3.4", "x1^2 + x1", 1, {2, 4, 6, 8}},
      {"ex3.5", "2*x1^2 + x1", 1, {3, 5, 7}},
      {"ex3.6", "2*x1^4 + x1^2", 1, {9, 27, 81}},
      {"ex3.7", "2*x1^4 + 2*x1^3 + 2*x1^2 + x1", 1, {3, 4, 12}},
      {"ex3.8", "x1^3 + 2*x1*x2 + 2*x2^2", 2, {2, 3}},
      {"ex3.9", "x1^3 + 2*x1*x2 + x2^2", 2, {2, 3, 9, 27}},
      {"ex3.10", "2*x1*x2^2 + 2*x1^2*x2 + 2*x1^2 + 2*x2^2 + x1 + x2", 2, {4}},
  };
}

std::vector<ExampleRow> verify_examples(std::size_t max_points) {
  std::vector<ExampleRow> rows;
  for (const auto& item : example_catalog()) {
    const PolyExpr expr = parse_poly(item.formula, item.n);
    for (int qv : item.moduli) {
      const Modulus q(qv);
      ExampleRow row{item.label, item.formula, qv, item.n, ExampleRow::Status::fail, {}, 0.0};
      BigInt points;
      mpz_ui_pow_ui(points.get_mpz_t(), static_cast<unsigned long>(qv), static_cast<unsigned long>(item.n));
      if (points > BigInt(std::to_string(max_points))) {
        row.status = ExampleRow::Status::skipped;
        row.detail = "table size " + points.get_str() + " above " + std::to_string(max_points);
        rows.push_back(std::move(row));
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      const GenFunction f = eval_to_function(expr, q);
      const Spectrum s = full_spectrum(f, Backend::exact);
      std::optional<std::size_t> bad;
      for (std::size_t u = 0; u < s.size() && !bad; ++u) {
        if (!(s.exact[u] * s.exact[u].conjugate()).equals_integer(points)) bad = u;
      }
      if (bad) {
        row.detail = "|T|^2 != q^n at u index " + std::to_string(*bad);
      } else {
        row.status = ExampleRow::Status::pass;
        row.detail = "|T|^2 = " + points.get_str() + " at all " + points.get_str() + " points";
      }
      // The two-variable bilinear form has the closed-form spectrum
      // T(u) = q w^{(2 u2 + 1)(q - u1 - 1)}; check it pointwise.
      if (row.status == ExampleRow::Status::pass && item.formula == "2*x1*x2 + x1") {
        for (std::size_t u = 0; u < s.size(); ++u) {
          const ZqPoint p = point_of(u, q, 2);
          const long long e = static_cast<long long>(2 * p[1] + 1) * (qv - p[0] - 1);
          if (!equivalent(s.exact[u], CycloElement::root_power(q.twice(), e) * BigInt(qv))) {
            row.status = ExampleRow::Status::fail;
            row.detail = "spectrum phase mismatch at u index " + std::to_string(u);
            break;
          }
        }
        if (row.status == ExampleRow::Status::pass) row.detail += "; phases match w^((2u2+1)(q-u1-1))";
      }
      row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace nega

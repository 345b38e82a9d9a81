#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nega/cyclotomic.hpp"
#include "nega/transforms.hpp"
#include "nega/zq.hpp"

namespace nega {

inline constexpr std::uint64_t kDefaultSearchCeiling = 100'000'000;

class InfeasibleSpace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when the exact and float routes reach different verdicts on the
// same candidate.
class BackendDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Shard {
  std::size_t index = 0;
  std::size_t count = 1;
};

// All (2q)^(q^n) functions Z_q^n -> Z_2q. Candidate i has as its truth table
// the base-2q digits of i, most significant first, so index order is
// lexicographic order of value tables.
class SearchSpace {
 public:
  // Throws InfeasibleSpace when the candidate count exceeds ceiling.
  SearchSpace(Modulus q, int n, std::uint64_t ceiling = kDefaultSearchCeiling);

  Modulus modulus() const noexcept { return q_; }
  int arity() const noexcept { return n_; }
  std::uint64_t total() const noexcept { return total_; }

  // Contiguous [begin, end) slice of the index range; the slices of all
  // shards partition [0, total).
  std::pair<std::uint64_t, std::uint64_t> range(Shard shard) const;

 private:
  Modulus q_;
  int n_;
  std::uint64_t total_;
};

// Candidate count (2q)^(q^n) without any feasibility guard.
BigInt candidate_count(Modulus q, int n);

// Index of a value table inside its search space.
std::uint64_t candidate_index(const GenFunction& f);

class Enumerator {
 public:
  Enumerator(const SearchSpace& space, Shard shard);

  // Advances to the next candidate; false once the shard is exhausted.
  bool next();
  GenFunction current() const;
  std::uint64_t index() const noexcept { return index_; }

 private:
  Modulus q_;
  int n_;
  std::uint64_t index_;
  std::uint64_t end_;
  bool started_ = false;
  std::vector<int> digits_;
};

struct CatalogRecord {
  Modulus q;
  int n;
  std::uint64_t index;
  std::vector<int> values;
  bool negabent;
  // T conj(T) at every u; filled for negabent records only.
  std::vector<BigInt> tsq;
  // Phase of N_f(u) as a power of eta = exp(pi i / 2q) when it snaps within
  // kSnapTolerance; negabent records only.
  std::vector<std::optional<int>> phases;
};

struct SearchOptions {
  Backend backend = Backend::both;
  bool hits_only = false;
  double tolerance = kDefaultFlatnessTolerance;
};

// Classifies one candidate. The exact route is the autocorrelation zero test;
// the float route is the flat-spectrum test.
CatalogRecord classify(const GenFunction& f, const SearchOptions& options = {});

std::vector<CatalogRecord> search_shard(const SearchSpace& space, Shard shard, const SearchOptions& options = {});
// Runs every shard (concurrently) and merges the results in index order.
std::vector<CatalogRecord> search_negabent(const SearchSpace& space, std::size_t shards,
                                           const SearchOptions& options = {});

// One JSON object per line: {"q":..,"n":..,"values":[..],"negabent":..}
// with "tsq" and "phases" added for negabent records. Integers only.
std::string to_catalog_line(const CatalogRecord& r);
CatalogRecord parse_catalog_line(std::string_view line);
// Merges per-shard catalog lines into index order and drops duplicates.
std::vector<std::string> merge_catalog_lines(const std::vector<std::vector<std::string>>& shards);

struct ExampleItem {
  std::string label;
  std::string formula;  // polyspec syntax
  int n;
  std::vector<int> moduli;
};

// The worked examples with the moduli they are listed for.
std::vector<ExampleItem> example_catalog();

struct ExampleRow {
  enum class Status { pass, fail, skipped };
  std::string label;
  std::string formula;
  int q;
  int n;
  Status status;
  std::string detail;
  double seconds;
};

// Verifies every example exactly. Rows whose table would exceed max_points are
// reported as skipped.
std::vector<ExampleRow> verify_examples(std::size_t max_points = 10000);

}  // namespace nega

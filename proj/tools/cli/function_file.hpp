#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nega/zq.hpp"

namespace nega::cli {

// Malformed or out-of-contract input file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Function stored as {"q": .., "n": .., "target": "2q" | "q", "values": [..]}.
// target defaults to "2q"; entries are reduced into [0, target) on load.
struct FunctionFile {
  enum class Target { twice_q, q };

  Modulus q;
  int n;
  Target target;
  std::vector<int> values;

  GenFunction gen() const;
  QaryFunction qary() const;
};

FunctionFile parse_function_file(std::string_view text);
FunctionFile load_function_file(const std::filesystem::path& path);

FunctionFile to_function_file(const GenFunction& f);
FunctionFile to_function_file(const QaryFunction& g);

// Canonical single-line form, newline terminated.
std::string serialize(const FunctionFile& file);

}  // namespace nega::cli

#include "cli/function_file.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nega::cli {

GenFunction FunctionFile::gen() const {
  if (target != Target::twice_q) throw InputError("expected a function into Z_2q (target \"2q\")");
  return GenFunction(q, n, values);
}

QaryFunction FunctionFile::qary() const {
  if (target != Target::q) throw InputError("expected a q-ary function (target \"q\")");
  return QaryFunction(q, n, values);
}

FunctionFile parse_function_file(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed function file: ") + e.what());
  }
  if (!j.is_object()) throw InputError("function file must be a JSON object");
  try {
    const long long qv = j.at("q").get<long long>();
    const long long nv = j.at("n").get<long long>();
    if (qv < 2 || qv > (1LL << 20)) throw InputError("q must be an integer >= 2");
    if (nv < 1 || nv > 64) throw InputError("n must be a positive integer");
    const Modulus q(static_cast<int>(qv));
    const int n = static_cast<int>(nv);

    auto target = FunctionFile::Target::twice_q;
    if (j.contains("target")) {
      const auto t = j.at("target").get<std::string>();
      if (t == "q") {
        target = FunctionFile::Target::q;
      } else if (t != "2q") {
        throw InputError("target must be \"2q\" or \"q\"");
      }
    }

    std::size_t expected = 0;
    try {
      expected = table_size(q, n);
    } catch (const std::length_error&) {
      throw InputError("q^n is too large");
    }
    const auto& raw = j.at("values");
    if (!raw.is_array()) throw InputError("values must be an array");
    if (raw.size() != expected) {
      throw InputError("values has " + std::to_string(raw.size()) + " entries, expected q^n = " + std::to_string(expected));
    }
    const Modulus range(target == FunctionFile::Target::q ? q.value() : q.twice());
    std::vector<int> values;
    values.reserve(expected);
    for (const auto& v : raw) {
      if (!v.is_number_integer()) throw InputError("values must be integers");
      values.push_back(lift(v.get<long long>(), range));
    }
    return FunctionFile{q, n, target, std::move(values)};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed function file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

FunctionFile load_function_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_function_file(buffer.str());
}

FunctionFile to_function_file(const GenFunction& f) {
  return FunctionFile{f.modulus(), f.arity(), FunctionFile::Target::twice_q,
                      std::vector<int>(f.values().begin(), f.values().end())};
}

FunctionFile to_function_file(const QaryFunction& g) {
  return FunctionFile{g.modulus(), g.arity(), FunctionFile::Target::q, std::vector<int>(g.values().begin(), g.values().end())};
}

std::string serialize(const FunctionFile& file) {
  nlohmann::ordered_json j;
  j["q"] = file.q.value();
  j["n"] = file.n;
  j["target"] = file.target == FunctionFile::Target::q ? "q" : "2q";
  j["values"] = file.values;
  return j.dump() + "\n";
}

}  // namespace nega::cli

#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "cli/function_file.hpp"
#include "nega/constructions.hpp"
#include "nega/correlation.hpp"
#include "nega/polyspec.hpp"
#include "nega/search.hpp"
#include "nega/transforms.hpp"

namespace nega::cli {
namespace {

using Json = nlohmann::ordered_json;

// Wrong flag values and q-parity violations.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string fmt(std::complex<double> z) {
  std::string s = fmt(z.real());
  const double im = z.imag();
  s += (std::signbit(im) ? "-" : "+");
  s += fmt(std::abs(im));
  s += "i";
  return s;
}

// Rounds to the printed precision so JSON and text agree.
Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(fmt(x));
}

Json big(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string point_str(const ZqPoint& p) {
  std::string s = "(";
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

Json point_json(const ZqPoint& p) { return std::vector<int>(p.coords().begin(), p.coords().end()); }

ZqPoint parse_point(const std::string& csv, Modulus q, int n) {
  std::vector<long long> coords;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--u: '" + item + "' is not an integer");
    }
  }
  if (static_cast<int>(coords.size()) != n) {
    throw UsageError("--u needs " + std::to_string(n) + " coordinates, got " + std::to_string(coords.size()));
  }
  return ZqPoint::from_signed(q, coords);
}

Backend backend_of(const std::string& name) {
  auto b = parse_backend(name);
  if (!b) throw UsageError("unknown backend '" + name + "' (exact, float or both)");
  return *b;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// ---- nht -------------------------------------------------------------------

struct NhtArgs {
  std::string file;
  std::string u;
  std::string backend = "both";
  bool json = false;
};

int cmd_nht(const NhtArgs& a, std::ostream& out) {
  const auto f = load_function_file(a.file).gen();
  const Backend backend = backend_of(a.backend);
  const Modulus q = f.modulus();
  const int n = f.arity();
  const double scale = std::pow(static_cast<double>(q.value()), -0.5 * n);
  const BigInt qn = [&] {
    BigInt v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(q.value()), static_cast<unsigned long>(n));
    return v;
  }();

  std::vector<std::size_t> indices;
  if (!a.u.empty()) {
    indices.push_back(index_of(parse_point(a.u, q, n)));
  } else {
    indices.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) indices[i] = i;
  }

  Spectrum s{q, n, {}, {}};
  if (!a.u.empty()) {
    const ZqPoint u = point_of(indices[0], q, n);
    if (backend != Backend::floating) s.exact.push_back(nht_exact(f, u));
    if (backend != Backend::exact) s.normalized.push_back(nht(f, u));
  } else {
    s = full_spectrum(f, backend);
  }

  bool flat = true;
  Json points = Json::array();
  if (!a.json) {
    out << "q=" << q.value() << " n=" << n << " backend=" << to_string(backend) << "\n";
    out << "u\t|N|\targ(N)/pi\tT*conj(T)\n";
  }
  for (std::size_t k = 0; k < indices.size(); ++k) {
    const ZqPoint u = point_of(indices[k], q, n);
    std::optional<BigInt> tsq;
    std::complex<double> value;
    if (s.has_exact()) {
      const auto& t = s.exact[k];
      tsq = (t * t.conjugate()).as_integer();
      value = t.to_complex() * scale;
      if (!tsq || *tsq != qn) flat = false;
    }
    if (s.has_float()) {
      value = s.normalized[k];
      if (!s.has_exact() && std::abs(std::abs(value) - 1.0) > kDefaultFlatnessTolerance) flat = false;
    }
    const double mag = std::abs(value);
    const double phase = mag == 0.0 ? 0.0 : std::arg(value) / std::numbers::pi;
    if (a.json) {
      Json p;
      p["u"] = point_json(u);
      p["magnitude"] = num(mag);
      p["phase_over_pi"] = num(phase);
      p["re"] = num(value.real());
      p["im"] = num(value.imag());
      p["tsq"] = tsq ? big(*tsq) : Json(nullptr);
      points.push_back(std::move(p));
    } else {
      out << point_str(u) << "\t" << fmt(mag) << "\t" << fmt(phase) << "\t" << (tsq ? tsq->get_str() : "-") << "\n";
    }
  }
  if (a.json) {
    Json j;
    j["q"] = q.value();
    j["n"] = n;
    j["backend"] = std::string(to_string(backend));
    j["qn"] = big(qn);
    j["flat"] = flat;
    j["points"] = std::move(points);
    emit(out, j);
  } else {
    out << "flat: " << (flat ? "yes" : "no") << "\n";
  }
  return kOk;
}

// ---- nac -------------------------------------------------------------------

struct NacArgs {
  std::string file;
  std::string cross;
  bool json = false;
};

int cmd_nac(const NacArgs& a, std::ostream& out) {
  const auto f = load_function_file(a.file).gen();
  std::optional<GenFunction> g;
  if (!a.cross.empty()) {
    g = load_function_file(a.cross).gen();
    if (g->modulus() != f.modulus() || g->arity() != f.arity()) {
      throw InputError("--cross function has a different domain");
    }
  }
  const auto table = g ? correlation_table(f, *g, Backend::both) : autocorrelation_table(f, Backend::both);
  const Modulus q = f.modulus();
  const int n = f.arity();

  std::size_t zeros = 0;
  Json entries = Json::array();
  if (!a.json) {
    out << (g ? "nega-crosscorrelation" : "nega-autocorrelation") << " q=" << q.value() << " n=" << n << "\n";
    out << "u\tC(u)\texact\tzero\n";
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    const ZqPoint u = point_of(i, q, n);
    const bool zero = table.exact[i].is_zero();
    zeros += zero;
    if (a.json) {
      Json e;
      e["u"] = point_json(u);
      e["re"] = num(table.values[i].real());
      e["im"] = num(table.values[i].imag());
      e["exact"] = table.exact[i].to_string();
      e["zero"] = zero;
      entries.push_back(std::move(e));
    } else {
      out << point_str(u) << "\t" << fmt(table.values[i]) << "\t" << table.exact[i].to_string() << "\t"
          << (zero ? "*" : "") << "\n";
    }
  }
  if (a.json) {
    Json j;
    j["q"] = q.value();
    j["n"] = n;
    j["cross"] = g.has_value();
    j["zero_entries"] = zeros;
    j["entries"] = std::move(entries);
    emit(out, j);
  } else {
    out << "exact zero entries: " << zeros << " of " << table.size() << "\n";
  }
  return kOk;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  std::string file;
  std::string backend = "both";
  double tol = kDefaultFlatnessTolerance;
  bool json = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const auto f = load_function_file(a.file).gen();
  const Backend backend = backend_of(a.backend);
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  const auto by_nac = is_negabent_via_nac(f);
  const auto by_spectrum = is_negabent(f, backend, a.tol);
  const bool agree = by_nac.negabent == by_spectrum.negabent;
  const bool negabent = agree && by_nac.negabent;

  if (a.json) {
    Json j;
    j["q"] = f.modulus().value();
    j["n"] = f.arity();
    j["backend"] = std::string(to_string(backend));
    j["negabent"] = negabent;
    j["routes_agree"] = agree;
    j["autocorrelation"] = {{"negabent", by_nac.negabent},
                            {"witness", by_nac.witness ? point_json(*by_nac.witness) : Json(nullptr)}};
    j["spectrum"] = {{"negabent", by_spectrum.negabent},
                     {"witness", by_spectrum.witness ? point_json(*by_spectrum.witness) : Json(nullptr)}};
    emit(out, j);
  } else {
    out << "autocorrelation route: " << (by_nac.negabent ? "negabent" : "not negabent");
    if (by_nac.witness) {
      out << " (nonzero NAC at u=" << point_str(*by_nac.witness) << ", C=" << nac_exact(f, *by_nac.witness).to_string()
          << ")";
    }
    out << "\n";
    out << "spectrum route (" << to_string(backend) << "): " << (by_spectrum.negabent ? "negabent" : "not negabent");
    if (by_spectrum.witness) {
      out << " (|N(u)|=" << fmt(std::abs(nht(f, *by_spectrum.witness))) << " at u=" << point_str(*by_spectrum.witness)
          << ")";
    }
    out << "\n";
    out << "negabent: " << (negabent ? "yes" : "no") << "\n";
  }
  if (!agree) err << "error: the two routes disagree\n";
  return negabent ? kOk : kVerdictFalse;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  bool even_quadratic = false;
  bool bilinear = false;
  std::string poly;
  std::vector<std::string> direct_sum;
  int q = 0;
  int n = 0;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const int modes = a.even_quadratic + a.bilinear + !a.poly.empty() + !a.direct_sum.empty();
  if (modes != 1) throw UsageError("choose exactly one of --thm7, --thm8, --poly, --direct-sum");
  auto need_q = [&] {
    if (a.q < 2) throw UsageError("--q must be an integer >= 2");
    return Modulus(a.q);
  };
  auto need_n = [&] {
    if (a.n < 1) throw UsageError("--n must be a positive integer");
    return a.n;
  };

  std::optional<GenFunction> f;
  if (a.even_quadratic) {
    const Modulus q = need_q();
    const int n = need_n();
    if (q.value() % 2 != 0) throw UsageError("--thm7 requires an even q");
    try {
      (void)table_size(q, n);
    } catch (const std::length_error&) {
      throw UsageError("q^n is too large");
    }
    f = even_quadratic(q, n);
  } else if (a.bilinear) {
    f = bilinear_two_var(need_q());
  } else if (!a.poly.empty()) {
    const Modulus q = need_q();
    const int n = need_n();
    try {
      (void)table_size(q, n);
    } catch (const std::length_error&) {
      throw UsageError("q^n is too large");
    }
    f = eval_to_function(parse_poly(a.poly, n), q);
  } else {
    const auto f1 = load_function_file(a.direct_sum[0]).gen();
    const auto f2 = load_function_file(a.direct_sum[1]).gen();
    if (f1.modulus() != f2.modulus()) throw InputError("direct sum needs a common q");
    try {
      (void)table_size(f1.modulus(), f1.arity() + f2.arity());
    } catch (const std::length_error&) {
      throw InputError("direct sum is too large");
    }
    f = direct_sum(f1, f2);
  }
  write_output(a.out, serialize(to_function_file(*f)), out);
  return kOk;
}

// ---- qary-spectrum ---------------------------------------------------------

struct QaryArgs {
  std::string file;
  bool json = false;
};

int cmd_qary(const QaryArgs& a, std::ostream& out) {
  const auto g = load_function_file(a.file).qary();
  const auto spec = qary_spectrum(g);
  const Modulus q = g.modulus();
  const int n = g.arity();
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& v : spec) {
    lo = std::min(lo, std::abs(v));
    hi = std::max(hi, std::abs(v));
  }
  const double ratio = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  const bool flat = hi - lo <= 2 * kDefaultFlatnessTolerance && std::abs(hi - 1.0) <= kDefaultFlatnessTolerance;

  if (a.json) {
    Json j;
    j["q"] = q.value();
    j["n"] = n;
    Json pts = Json::array();
    for (std::size_t i = 0; i < spec.size(); ++i) {
      pts.push_back({{"u", point_json(point_of(i, q, n))},
                     {"magnitude", num(std::abs(spec[i]))},
                     {"re", num(spec[i].real())},
                     {"im", num(spec[i].imag())}});
    }
    j["points"] = std::move(pts);
    j["min_magnitude"] = num(lo);
    j["max_magnitude"] = num(hi);
    j["ratio"] = num(ratio);
    j["flat"] = flat;
    emit(out, j);
  } else {
    out << "q-ary spectrum q=" << q.value() << " n=" << n << "\n";
    out << "u\t|N'|\tN'\n";
    for (std::size_t i = 0; i < spec.size(); ++i) {
      out << point_str(point_of(i, q, n)) << "\t" << fmt(std::abs(spec[i])) << "\t" << fmt(spec[i]) << "\n";
    }
    out << "min |N'|: " << fmt(lo) << "\n";
    out << "max |N'|: " << fmt(hi) << "\n";
    out << "max/min ratio: " << fmt(ratio) << "\n";
    out << "flat: " << (flat ? "yes" : "no") << "\n";
  }
  return kOk;
}

// ---- q4-report -------------------------------------------------------------

struct Q4Args {
  std::string file;
  bool json = false;
};

const char* check_str(Check c) {
  switch (c) {
    case Check::pass:
      return "pass";
    case Check::fail:
      return "fail";
    case Check::indeterminate:
      return "n/a";
  }
  return "?";
}

int cmd_q4(const Q4Args& a, std::ostream& out) {
  const auto h = load_function_file(a.file).gen();
  if (h.modulus().value() != 4) throw UsageError("q4-report needs q = 4");
  if (h.arity() < 2) throw InputError("q4-report needs n >= 2");
  const auto report = q4_conditions(h);

  if (a.json) {
    Json j;
    j["slice_arity"] = report.slice_arity;
    j["total_slice_power"] = num(report.total_slice_power);
    Json pts = Json::array();
    for (const auto& r : report.points) {
      pts.push_back({{"u", point_json(r.u)},
                     {"weighted_magnitude", num(r.weighted_magnitude)},
                     {"weighted", check_str(r.weighted)},
                     {"phi_real", check_str(r.phi_real)},
                     {"psi_real", check_str(r.psi_real)},
                     {"power_sum", num(r.power_sum)},
                     {"power", check_str(r.power)},
                     {"alternating", check_str(r.alternating)}});
    }
    j["points"] = std::move(pts);
    j["all_weighted"] = report.all_weighted();
    j["all_ratios_real"] = report.all_ratios_real();
    j["indeterminate_ratio_points"] = report.indeterminate_ratio_points();
    j["all_power"] = report.all_power();
    emit(out, j);
  } else {
    out << "u\t|sum w^j N_j|\t(i)\tphi real\tpsi real\tsum |N_j|^2\tpower\talternating\n";
    for (const auto& r : report.points) {
      out << point_str(r.u) << "\t" << fmt(r.weighted_magnitude) << "\t" << check_str(r.weighted) << "\t"
          << check_str(r.phi_real) << "\t" << check_str(r.psi_real) << "\t" << fmt(r.power_sum) << "\t"
          << check_str(r.power) << "\t" << check_str(r.alternating) << "\n";
    }
    out << "total slice power: " << fmt(report.total_slice_power) << "\n";
    out << "(i) everywhere: " << (report.all_weighted() ? "yes" : "no") << "\n";
    out << "(ii) everywhere decidable: " << (report.all_ratios_real() ? "yes" : "no") << " ("
        << report.indeterminate_ratio_points() << " indeterminate)\n";
    out << "(iii) everywhere: " << (report.all_power() ? "yes" : "no") << "\n";
  }
  return kOk;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  int q = 0;
  int n = 0;
  std::size_t shards = 1;
  std::optional<std::size_t> shard;
  bool hits_only = false;
  std::string out;
  std::uint64_t ceiling = kDefaultSearchCeiling;
  std::string backend = "both";
  std::vector<std::string> merge;
};

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  if (!a.merge.empty()) {
    std::vector<std::vector<std::string>> parts;
    for (const auto& path : a.merge) parts.push_back(read_lines(path));
    std::vector<std::string> merged;
    try {
      merged = merge_catalog_lines(parts);
    } catch (const std::exception& e) {
      throw InputError(std::string("malformed catalog line: ") + e.what());
    }
    std::string text;
    for (const auto& line : merged) text += line + "\n";
    write_output(a.out, text, out);
    if (!a.out.empty()) out << "merged " << merged.size() << " records into " << a.out << "\n";
    return kOk;
  }

  if (a.q < 2) throw UsageError("--q must be an integer >= 2");
  if (a.n < 1) throw UsageError("--n must be a positive integer");
  if (a.shards < 1) throw UsageError("--shards must be >= 1");
  if (a.shard && *a.shard >= a.shards) throw UsageError("--shard must be below --shards");

  const SearchSpace space(Modulus(a.q), a.n, a.ceiling);
  SearchOptions opts;
  opts.backend = backend_of(a.backend);
  opts.hits_only = a.hits_only;

  const auto records =
      a.shard ? search_shard(space, Shard{*a.shard, a.shards}, opts) : search_negabent(space, a.shards, opts);
  std::string text;
  std::size_t hits = 0;
  for (const auto& r : records) {
    text += to_catalog_line(r) + "\n";
    hits += r.negabent;
  }
  write_output(a.out, text, out);
  std::ostream& summary = a.out.empty() ? err : out;
  summary << "searched " << (a.shard ? space.range(Shard{*a.shard, a.shards}).second -
                                           space.range(Shard{*a.shard, a.shards}).first
                                     : space.total())
          << " candidates, " << hits << " negabent\n";
  return kOk;
}

// ---- verify-examples -------------------------------------------------------

struct VerifyArgs {
  std::size_t max_points = 10000;
  bool json = false;
};

const char* status_str(ExampleRow::Status s) {
  switch (s) {
    case ExampleRow::Status::pass:
      return "pass";
    case ExampleRow::Status::fail:
      return "FAIL";
    case ExampleRow::Status::skipped:
      return "skipped";
  }
  return "?";
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto rows = verify_examples(a.max_points);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.status == ExampleRow::Status::fail;
  if (a.json) {
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"label", r.label},
                      {"formula", r.formula},
                      {"q", r.q},
                      {"n", r.n},
                      {"status", status_str(r.status)},
                      {"detail", r.detail},
                      {"seconds", num(r.seconds)}});
    }
    Json j;
    j["rows"] = std::move(list);
    j["failed"] = failed;
    j["ok"] = failed == 0;
    emit(out, j);
  } else {
    out << "label\tq\tn\tstatus\tseconds\tformula\tdetail\n";
    for (const auto& r : rows) {
      out << r.label << "\t" << r.q << "\t" << r.n << "\t" << status_str(r.status) << "\t" << fmt(r.seconds) << "\t"
          << r.formula << "\t" << r.detail << "\n";
    }
    out << rows.size() << " rows, " << failed << " failed\n";
  }
  return failed == 0 ? kOk : kVerdictFalse;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized nega-Hadamard transform toolkit", "nega"};
  app.require_subcommand(1);

  NhtArgs nht_a;
  auto* nht_c = app.add_subcommand("nht", "Transform at one point or over the whole domain");
  nht_c->add_option("file", nht_a.file, "Function file")->required();
  nht_c->add_option("--u", nht_a.u, "Point as comma-separated coordinates");
  nht_c->add_option("--backend", nht_a.backend, "exact, float or both");
  nht_c->add_flag("--json", nht_a.json);

  NacArgs nac_a;
  auto* nac_c = app.add_subcommand("nac", "Nega-autocorrelation or crosscorrelation table");
  nac_c->add_option("file", nac_a.file, "Function file")->required();
  nac_c->add_option("--cross", nac_a.cross, "Second function file");
  nac_c->add_flag("--json", nac_a.json);

  CheckArgs check_a;
  auto* check_c = app.add_subcommand("check", "Negabent verdict by autocorrelation and by spectrum");
  check_c->add_option("file", check_a.file, "Function file")->required();
  check_c->add_option("--backend", check_a.backend, "Spectrum route backend");
  check_c->add_option("--tol", check_a.tol, "Float flatness tolerance");
  check_c->add_flag("--json", check_a.json);

  ConstructArgs con_a;
  auto* con_c = app.add_subcommand("construct", "Write a function file for a known family");
  con_c->add_flag("--thm7,--even-quadratic", con_a.even_quadratic, "sum x_i^2 - sum x_i, even q");
  con_c->add_flag("--thm8,--bilinear", con_a.bilinear, "2 x1 x2 + x1");
  con_c->add_option("--poly", con_a.poly, "Polynomial in x1..xn");
  con_c->add_option("--direct-sum", con_a.direct_sum, "Two function files")->expected(2);
  con_c->add_option("--q", con_a.q);
  con_c->add_option("--n", con_a.n);
  con_c->add_option("--out", con_a.out, "Output path (stdout if omitted)");

  QaryArgs qary_a;
  auto* qary_c = app.add_subcommand("qary-spectrum", "Spectrum of a q-ary function");
  qary_c->add_option("file", qary_a.file, "Function file with target q")->required();
  qary_c->add_flag("--json", qary_a.json);

  Q4Args q4_a;
  auto* q4_c = app.add_subcommand("q4-report", "Slice conditions of a q = 4 function");
  q4_c->add_option("file", q4_a.file, "Function file")->required();
  q4_c->add_flag("--json", q4_a.json);

  SearchArgs search_a;
  std::size_t shard_index = 0;
  auto* search_c = app.add_subcommand("search", "Exhaustive negabent catalog");
  search_c->add_option("--q", search_a.q);
  search_c->add_option("--n", search_a.n);
  search_c->add_option("--shards", search_a.shards);
  auto* shard_opt = search_c->add_option("--shard", shard_index, "Run only this shard");
  search_c->add_flag("--hits-only", search_a.hits_only);
  search_c->add_option("--out", search_a.out);
  search_c->add_option("--ceiling", search_a.ceiling, "Largest candidate count accepted");
  search_c->add_option("--backend", search_a.backend);
  search_c->add_option("--merge", search_a.merge, "Merge catalog files instead of searching");

  VerifyArgs verify_a;
  auto* verify_c = app.add_subcommand("verify-examples", "Check the worked examples");
  verify_c->add_option("--max-points", verify_a.max_points, "Skip rows with a larger table");
  verify_c->add_flag("--json", verify_a.json);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (shard_opt->count() > 0) search_a.shard = shard_index;

  try {
    if (*nht_c) return cmd_nht(nht_a, out);
    if (*nac_c) return cmd_nac(nac_a, out);
    if (*check_c) return cmd_check(check_a, out, err);
    if (*con_c) return cmd_construct(con_a, out);
    if (*qary_c) return cmd_qary(qary_a, out);
    if (*q4_c) return cmd_q4(q4_a, out);
    if (*search_c) return cmd_search(search_a, out, err);
    if (*verify_c) return cmd_verify(verify_a, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: --poly " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const InfeasibleSpace& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const BackendDisagreement& e) {
    err << "error: " << e.what() << "\n";
    return kVerdictFalse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace nega::cli

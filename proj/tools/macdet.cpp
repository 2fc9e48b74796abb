// macdet: compute J_lambda(X; q, t), run the verification suites, write tables.

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "macdet/macdonald.hpp"
#include "macdet/oracle.hpp"
#include "macdet/verify.hpp"
#include "macdet/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace macdet;

namespace {

constexpr int exit_bad_partition = 2;
constexpr int exit_unwritable = 3;

struct Request {
  Partition lambda;
  std::string basis = "smod";
  std::string method = "determinant";
  std::optional<int> n;
};

Basis target_basis(const std::string& name) {
  if (name == "smod") return Basis::s_mod;
  if (name == "schur") return Basis::s;
  return Basis::m;
}

// p_k -> p_k (t^k - 1)/(q^k - 1) on every power sum, or its inverse.
SymExpansion plethysm_tq(const SymExpansion& f_p, bool inverse) {
  SymExpansion out(Basis::p, f_p.weight());
  for (const auto& [rho, c] : f_p.terms()) {
    QtRat factor(1);
    for (int k : rho.parts()) {
      const QtRat r(QtPoly::monomial(1, 0, k) - QtPoly(1), QtPoly::monomial(1, k, 0) - QtPoly(1));
      factor *= inverse ? r.inverse() : r;
    }
    out.add_term(rho, c * factor);
  }
  return out;
}

// Re-expansion that may cross between f[X] and f[X^{tq}] bases.
SymExpansion change_basis(const SymExpansion& f, Basis target) {
  if (f.basis() == target) return f;
  if (is_modified(f.basis()) == is_modified(target)) return convert_basis(f, target);
  if (is_modified(f.basis())) {
    const SymExpansion p = convert_basis(convert_basis(f, Basis::s_mod).retagged(Basis::s), Basis::p);
    return convert_basis(plethysm_tq(p, false), target);
  }
  const SymExpansion p = plethysm_tq(convert_basis(f, Basis::p), true);
  return convert_basis(convert_basis(p, Basis::s).retagged(Basis::s_mod), target);
}

SymExpansion compute(const Request& r) {
  const Basis target = target_basis(r.basis);
  if (r.method == "creation") return change_basis(jpoly_via_creation(r.lambda), target);
  if (r.method == "oracle") return change_basis(oracle::gram_schmidt_J(r.lambda), target);
  switch (target) {
    case Basis::s_mod: return jpoly_modified_schur(r.lambda);
    case Basis::s: return jpoly_schur(r.lambda);
    default: return jpoly_monomial(r.lambda);
  }
}

int default_n(const Request& r) {
  if (r.n) return *r.n;
  return r.basis == "monomial" ? r.lambda.weight() : r.lambda.length();
}

// --- cache -------------------------------------------------------------------

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::optional<fs::path> cache_dir() {
  if (const char* dir = std::getenv("MACDET_CACHE_DIR")) return fs::path(dir);
  if (const char* home = std::getenv("HOME")) return fs::path(home) / ".cache" / "macdet";
  return std::nullopt;
}

std::optional<fs::path> cache_file(const Request& r) {
  const auto dir = cache_dir();
  if (!dir) return std::nullopt;
  std::ostringstream key;
  key << r.lambda.to_string() << '|' << r.basis << '|' << r.method << '|' << default_n(r) << '|' << engine_version;
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key.str())));
  return *dir / name;
}

json make_record(const Request& r) {
  if (const auto path = cache_file(r); path && fs::exists(*path)) {
    try {
      std::ifstream in(*path);
      json cached = json::parse(in);
      if (cached.value("engine_version", "") == engine_version) return cached;
    } catch (const std::exception&) {
      // unreadable entries are recomputed
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const SymExpansion f = compute(r);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json rec = {{"lambda", r.lambda.parts()},
              {"basis", r.basis},
              {"method", r.method},
              {"n", default_n(r)},
              {"q_t_convention", "J(X;q,t); [|a|] = sum q^{a_i} t^{n-i}"},
              {"engine_version", engine_version},
              {"seconds", seconds},
              {"expansion", f.to_json()}};
  if (r.n) rec["realization"] = realize_in_variables(change_basis(f, Basis::p), *r.n).to_string();
  if (const auto path = cache_file(r)) {
    std::error_code ec;
    fs::create_directories(path->parent_path(), ec);
    const fs::path tmp = path->string() + ".tmp" + std::to_string(omp_get_thread_num());
    std::ofstream out(tmp);
    if (out << rec.dump() << '\n') {
      out.close();
      fs::rename(tmp, *path, ec);
    }
  }
  return rec;
}

// --- rendering ---------------------------------------------------------------

std::string latex_coeff(const QtRat& c) {
  auto poly = [](const QtPoly& p) {
    std::string s = p.to_string();
    std::string out;
    for (char ch : s)
      if (ch != '*') out += ch;
    return out;
  };
  if (c.is_polynomial()) return "(" + poly(c.num()) + ")";
  return "\\frac{" + poly(c.num()) + "}{" + poly(c.den()) + "}";
}

std::string latex_expansion(const SymExpansion& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [p, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string sub;
    for (std::size_t i = 0; i < p.parts().size(); ++i) sub += (i ? "," : "") + std::to_string(p[i]);
    if (p.empty()) sub = "0";
    out += latex_coeff(c);
    switch (f.basis()) {
      case Basis::s_mod: out += " S_{" + sub + "}[X^{tq}]"; break;
      case Basis::s: out += " s_{" + sub + "}"; break;
      default: out += " " + std::string(basis_tag(f.basis())) + "_{" + sub + "}"; break;
    }
  }
  return out;
}

std::string render_latex(const Request& r, const SymExpansion& f) {
  if (r.method != "determinant" || r.lambda.empty()) return latex_expansion(f);
  const Basis b = target_basis(r.basis);
  const EntryMatrix m = b == Basis::s_mod ? entry_matrix(r.lambda)
                        : b == Basis::s   ? schur_entry_matrix(r.lambda)
                                          : monomial_entry_matrix(r.lambda);
  return to_latex(m);
}

Partition parse_lambda(const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--lambda", std::string("invalid partition '") + text + "': " + e.what());
  }
}

int cmd_jpoly(const Request& r, const std::string& format) {
  const json rec = make_record(r);
  if (format == "json") {
    std::cout << rec.dump(2) << '\n';
    return 0;
  }
  const SymExpansion f = SymExpansion::from_json(rec.at("expansion"));
  if (format == "latex") {
    std::cout << render_latex(r, f) << '\n';
  } else {
    std::cout << f.to_text() << '\n';
    if (rec.contains("realization")) std::cout << rec["realization"].get<std::string>() << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& suite, const verify::SuiteOptions& opt) {
  const auto reports = verify::run_suites(suite, opt);
  json out = json::array();
  bool ok = true;
  for (const auto& rep : reports) {
    out.push_back(rep.to_json());
    ok = ok && rep.passed();
  }
  std::cout << out.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_table(int max_weight, const std::string& basis, const std::string& method, const fs::path& out_path) {
  std::ofstream probe(out_path, std::ios::app);
  if (!probe) {
    std::cerr << "cannot write " << out_path.string() << '\n';
    return exit_unwritable;
  }
  probe.close();
  std::vector<Request> requests;
  for (int w = 1; w <= max_weight; ++w)
    for (const auto& l : partitions_of(w)) requests.push_back({l, basis, method, std::nullopt});
  std::vector<json> records(requests.size());
  std::vector<std::exception_ptr> errors(requests.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < requests.size(); ++i) {
    try {
      records[i] = make_record(requests[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::ofstream out(out_path, std::ios::trunc);
  out << json(records).dump(2) << '\n';
  if (!out) {
    std::cerr << "cannot write " << out_path.string() << '\n';
    return exit_unwritable;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Macdonald polynomials by determinantal formulas"};
  app.require_subcommand(1);
  app.set_version_flag("--version", engine_version);

  const std::vector<std::string> bases = {"smod", "schur", "monomial"};
  const std::vector<std::string> methods = {"determinant", "creation", "oracle"};

  std::string lambda_text;
  Request req;
  std::string format = "text";
  int n = 0;
  auto* jpoly = app.add_subcommand("jpoly", "Compute J_lambda in a basis");
  jpoly->add_option("--lambda", lambda_text, "Partition, e.g. 2,2,1 (0 for the empty partition)")->required();
  jpoly->add_option("--basis", req.basis)->check(CLI::IsMember(bases));
  jpoly->add_option("--method", req.method)->check(CLI::IsMember(methods));
  jpoly->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));
  auto* n_opt = jpoly->add_option("--n", n, "Also realize in n variables")->check(CLI::NonNegativeNumber);

  std::string suite = "all";
  verify::SuiteOptions opt;
  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite)->check(CLI::IsMember({"eigen", "appendix", "cross", "oracle", "all"}));
  ver->add_option("--max-weight", opt.max_weight)->check(CLI::Range(1, 8));
  ver->add_option("--seed", opt.seed);
  ver->add_option("--instances", opt.instances)->check(CLI::PositiveNumber);

  int table_weight = 4;
  std::string table_basis = "monomial";
  std::string table_method = "determinant";
  std::string out_path;
  auto* table = app.add_subcommand("table", "Write a JSON table of J_lambda for all |lambda| <= W");
  table->add_option("--max-weight", table_weight)->check(CLI::Range(1, 8));
  table->add_option("--basis", table_basis)->check(CLI::IsMember(bases));
  table->add_option("--method", table_method)->check(CLI::IsMember(methods));
  table->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*jpoly) {
      try {
        req.lambda = parse_lambda(lambda_text);
      } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return exit_bad_partition;
      }
      if (*n_opt) req.n = n;
      return cmd_jpoly(req, format);
    }
    if (*ver) return cmd_verify(suite, opt);
    return cmd_table(table_weight, table_basis, table_method, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

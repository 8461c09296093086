// kmweyl: command-line front end for Weyl group growth series and the rank-3
// hyperbolic denominator catalog.
//
// Exit status: 0 success/pass, 1 verification failed or no match, 2 input or usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "kmweyl/kmweyl.hpp"

namespace {

using nlohmann::ordered_json;
using namespace kmweyl;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct GlobalFlags {
  bool json = false;
  unsigned threads = 1;
};

EnumerateOptions enumerate_options(const GlobalFlags& g) {
  EnumerateOptions o;
  o.threads = g.threads;
  return o;
}

CartanMatrix load_cartan(const std::string& path) { return parse_cartan(read_text_file(path)); }

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? sep : "") + std::to_string(v[k]);
  return out;
}

int run_enumerate(const GlobalFlags& g, const std::string& path, int max_len) {
  const auto m = load_cartan(path);
  const auto series = enumerate_levels(m, max_len, enumerate_options(g));
  if (g.json) {
    ordered_json j;
    j["name"] = m.name();
    j["q"] = series.q;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "# " << m.name() << "\n";
    for (std::size_t n = 0; n < series.q.size(); ++n) std::cout << n << " " << series.q[n] << "\n";
    std::cout << "total " << series.total() << "\n";
  }
  return kExitOk;
}

ordered_json entry_json(const CatalogEntry& e) {
  ordered_json j;
  j["s"] = e.s;
  j["class_id"] = e.class_id;
  j["factored"] = format_factored(e.q_factored);
  j["expanded"] = format_polynomial(e.q_expanded);
  return j;
}

int run_catalog_list(const GlobalFlags& g) {
  const auto& cat = Catalog::instance();
  if (g.json) {
    ordered_json j;
    j["entries"] = ordered_json::array();
    for (const auto& e : cat.entries()) j["entries"].push_back(entry_json(e));
    j["classes"] = cat.classes();
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  for (const auto& e : cat.entries())
    std::cout << "Q_" << e.s << "\tclass " << e.class_id << "\t" << format_factored(e.q_factored) << "\t"
              << format_polynomial(e.q_expanded) << "\n";
  std::cout << cat.classes().size() << " classes:";
  for (const auto& cls : cat.classes()) std::cout << " {" << join(cls, ",") << "}";
  std::cout << "\n";
  return kExitOk;
}

int run_catalog_show(const GlobalFlags& g, int s) {
  const auto& e = q_polynomial(s);
  if (g.json) {
    std::cout << entry_json(e).dump() << "\n";
  } else {
    std::cout << "Q_" << e.s << " = " << format_factored(e.q_factored) << "\n";
    std::cout << "    = " << format_polynomial(e.q_expanded) << "\n";
    std::cout << "class " << e.class_id << ": {" << join(duplicate_classes()[static_cast<std::size_t>(e.class_id)], ",")
              << "}\n";
  }
  return kExitOk;
}

void print_table(const VerificationReport& rep, bool with_expected) {
  std::cout << "degree\t" << (with_expected ? "expected\t" : "") << "actual\n";
  for (const auto& row : rep.table) {
    std::cout << row.degree << "\t";
    if (with_expected) std::cout << row.expected << "\t";
    std::cout << row.actual << "\n";
  }
}

int run_verify(const GlobalFlags& g, const std::string& path, int s, int max_len) {
  const auto m = load_cartan(path);
  const auto rep = verify_identity(m, s, max_len, enumerate_options(g));
  if (g.json) {
    std::cout << report_to_json(rep).dump() << "\n";
  } else {
    std::cout << "subject: " << rep.matrix_name << ", s=" << s << "\n";
    std::cout << "max length: " << rep.max_length << "\n";
    std::cout << "outcome: " << to_string(rep.outcome) << "\n";
    if (rep.first_mismatch)
      std::cout << "first mismatch at degree " << rep.first_mismatch->degree << ": expected "
                << rep.first_mismatch->expected << ", actual " << rep.first_mismatch->actual << "\n";
    print_table(rep, true);
  }
  return rep.outcome == Outcome::Pass ? kExitOk : kExitFailed;
}

int run_discover(const GlobalFlags& g, const std::string& path, int max_len) {
  const auto m = load_cartan(path);
  const auto rep = discover(m, max_len, enumerate_options(g));
  if (g.json) {
    std::cout << report_to_json(rep).dump() << "\n";
  } else {
    std::cout << "subject: " << rep.matrix_name << " (discovery)\n";
    std::cout << "max length: " << rep.max_length << "\n";
    std::cout << "fitted: " << (rep.fitted ? format_polynomial(*rep.fitted) : "none") << "\n";
    std::cout << "matches: " << (rep.matches.empty() ? "none" : join(rep.matches)) << "\n";
    std::cout << "outcome: " << to_string(rep.outcome) << "\n";
    print_table(rep, !rep.matches.empty());
  }
  return rep.outcome == Outcome::Pass ? kExitOk : kExitFailed;
}

int run_a3(const GlobalFlags& g, std::optional<int> only) {
  const std::vector<int> expected_failures{8, 9, 13, 14};
  std::vector<int> indices;
  if (only) {
    q_polynomial(*only);
    indices.push_back(*only);
  } else {
    for (int s = 1; s <= kCatalogSize; ++s) indices.push_back(s);
  }
  ordered_json results = ordered_json::array();
  std::vector<int> failures;
  for (int s : indices) {
    const auto r = a3_reduction(s);
    if (!r) failures.push_back(s);
    if (g.json)
      results.push_back({{"s", s}, {"R", r ? ordered_json(format_polynomial(*r)) : ordered_json(nullptr)}});
    else
      std::cout << "s=" << s << "\t" << (r ? "R = " + format_polynomial(*r) : "no polynomial solution") << "\n";
  }
  const bool ok = only ? failures.empty() : failures == expected_failures;
  if (g.json) {
    ordered_json j;
    j["results"] = results;
    j["failures"] = failures;
    if (!only) j["pattern_ok"] = ok;
    std::cout << j.dump() << "\n";
  } else if (!only) {
    std::cout << "solutions: " << indices.size() - failures.size() << ", failures: " << failures.size() << " ("
              << join(failures) << ")\n";
  }
  return ok ? kExitOk : kExitFailed;
}

int run_classify(const GlobalFlags& g, const std::string& path) {
  const auto m = load_cartan(path);
  const auto cls = classify(m);
  const Int det = determinant(m);
  if (g.json) {
    ordered_json j;
    j["name"] = m.name();
    j["kind"] = to_string(cls.kind);
    j["hyperbolic"] = cls.hyperbolic;
    j["determinant"] = det;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << m.name() << ": " << to_string(cls.kind) << (cls.hyperbolic ? ", hyperbolic" : "")
              << " (det " << det << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl group growth series and rank-3 hyperbolic Poincare denominators"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Emit JSON instead of text");
  app.add_option("--threads", flags.threads, "Worker threads for level expansion")->check(CLI::Range(1u, 256u));

  std::string cartan_path;
  int max_len = kDefaultOrder;
  int s_index = 0;
  bool all = false;

  auto* enumerate = app.add_subcommand("enumerate", "Print q(0..N) for a Cartan matrix");
  enumerate->add_option("--cartan", cartan_path, "Cartan matrix JSON file")->required();
  enumerate->add_option("--max-len", max_len, "Largest word length N")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--text", "Emit text (default)");

  auto* catalog = app.add_subcommand("catalog", "Show the Q_s catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "All entries and duplicate classes");
  auto* show = catalog->add_subcommand("show", "One entry");
  show->add_option("--s", s_index, "Catalog index 1..19")->required();

  auto* verify = app.add_subcommand("verify", "Check growth(t) = P_B3(t)/Q_s(t) through degree N");
  verify->add_option("--cartan", cartan_path, "Cartan matrix JSON file")->required();
  verify->add_option("--s", s_index, "Catalog index 1..19")->required();
  verify->add_option("--max-len", max_len, "Order N (default 20)");

  auto* disc = app.add_subcommand("discover", "Fit the denominator of P_B3(t)/growth(t) and look it up");
  disc->add_option("--cartan", cartan_path, "Cartan matrix JSON file")->required();
  disc->add_option("--max-len", max_len, "Order N (default 20)");

  auto* a3 = app.add_subcommand("a3", "Existence of R_s with growth = P_A3/R_s");
  auto* a3_all = a3->add_flag("--all", all, "All nineteen indices");
  auto* a3_s = a3->add_option("--s", s_index, "Catalog index 1..19");
  a3_all->excludes(a3_s);

  auto* cls = app.add_subcommand("classify", "Finite/affine/indefinite and hyperbolicity");
  cls->add_option("--cartan", cartan_path, "Cartan matrix JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*enumerate) return run_enumerate(flags, cartan_path, max_len);
    if (*list) return run_catalog_list(flags);
    if (*show) return run_catalog_show(flags, s_index);
    if (*verify) return run_verify(flags, cartan_path, s_index, max_len);
    if (*disc) return run_discover(flags, cartan_path, max_len);
    if (*a3) {
      if (!all && a3_s->count() == 0) {
        std::cerr << "a3: pass --all or --s k\n";
        return kExitInput;
      }
      return run_a3(flags, all ? std::nullopt : std::optional<int>(s_index));
    }
    if (*cls) return run_classify(flags, cartan_path);
  } catch (const kmweyl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

// wba_cli -- command line front end for the weighted boolean algebra workbench.
//
// Subcommands:
//   poset   export the Hasse diagram of B_n^{[k]} (optionally with the
//           synthetic top element and edge labels) as DOT or JSON
//   dims    tabulate, for every content mu with |mu| <= n and colors in [k],
//           the three independent dimension counts as CSV
//   verify  run a named suite of self-checks and emit one JSON report line
//           per check on stdout, plus a human summary on stderr
//
// Exit codes: 0 all requested work succeeded (and all checks passed),
//             1 at least one check failed,
//             2 usage error / budget refusal.
//
// stdout output is byte-deterministic for fixed arguments; anything that can
// vary run to run (timings) goes to stderr only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wba/json_io.hpp"
#include "wba/report.hpp"
#include "wba/verify.hpp"

namespace {

// Resolve "--out FILE" vs stdout.  Keeps the stream alive for the caller.
struct OutputTarget {
  std::unique_ptr<std::ofstream> file;
  std::ostream* stream = &std::cout;

  // Returns false (after printing to stderr) when the file cannot be opened.
  bool open(const std::string& path) {
    if (path.empty()) return true;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) {
      std::cerr << "error: cannot open output file '" << path << "'\n";
      return false;
    }
    stream = file.get();
    return true;
  }
};

// Poset sizes grow like sum_j C(n,j) * #wcomp(j,k); refuse anything that
// would produce an absurd element count instead of thrashing.
long long predicted_poset_size(int n, int k) {
  long long total = 0;
  for (int j = 0; j <= n; ++j) {
    // weak compositions of j with support in [k]: C(j+k-1, k-1)
    total += wba::binomial(n, j) * wba::binomial(j + k - 1, k - 1);
  }
  return total;
}

constexpr long long kMaxPosetElements = 200000;

int run_poset(int n, int k, const std::string& format, const std::string& out,
              bool with_top, bool with_labels) {
  if (predicted_poset_size(n, k) > kMaxPosetElements) {
    std::cerr << "error: B_" << n << "^[" << k << "] would have "
              << predicted_poset_size(n, k) << " elements (limit "
              << kMaxPosetElements << "); choose smaller n or k\n";
    return 2;
  }
  wba::FinitePoset p = wba::build_weighted_boolean(n, k);
  if (with_top) p = wba::add_top(p);

  OutputTarget target;
  if (!target.open(out)) return 2;
  if (format == "dot") {
    *target.stream << wba::poset_to_dot(p, with_labels);
  } else {
    *target.stream << wba::poset_to_json(p, with_labels).dump(2) << "\n";
  }
  std::cerr << "poset: " << p.size() << " elements, "
            << (with_top ? "with" : "without") << " top\n";
  return 0;
}

int run_dims(int n, int k, const std::string& out) {
  if (n > 5 || k > 3) {
    std::cerr << "error: dims is budgeted for n <= 5, k <= 3 "
              << "(got n=" << n << ", k=" << k << ")\n";
    return 2;
  }
  OutputTarget target;
  if (!target.open(out)) return 2;

  *target.stream << "mu,ninc,rank_nullity,top_betti\n";
  for (const auto& mu : wba::detail::contents_up_to(n, k)) {
    wba::DimRow row = wba::dimension_row(mu);
    *target.stream << "\"" << mu.str() << "\"," << row.ninc << ","
                   << row.rank_nullity << "," << row.top_betti << "\n";
  }
  return 0;
}

// One verify suite = a list of checks.  The quick profile respects the
// -n/-k/--degree flags (clamped to sane caps); the full profile pins every
// budget to the documented defaults regardless of flags.
struct Budgets {
  int el_n, el_k;
  int dims_n, dims_k;
  int char_n;
  int series_deg, dimser_n, foulkes_n, htoe_n;
  int spec_h, spec_euler;
  int gessel_k, gessel_len;
  int whitney_n, whitney_k;
};

Budgets full_budgets() {
  Budgets b;
  b.el_n = 4;      b.el_k = 2;
  b.dims_n = 5;    b.dims_k = 3;
  b.char_n = 4;
  b.series_deg = 5;
  b.dimser_n = 6;  b.foulkes_n = 6;  b.htoe_n = 8;
  b.spec_h = 8;    b.spec_euler = 7;
  b.gessel_k = 2;  b.gessel_len = 5;
  b.whitney_n = 4; b.whitney_k = 2;
  return b;
}

Budgets quick_budgets(int n, int k, int degree) {
  Budgets b;
  b.el_n = std::min(n, 4);        b.el_k = std::min(k, 2);
  b.dims_n = std::min(n, 4);      b.dims_k = std::min(k, 3);
  b.char_n = std::min(n, 3);
  b.series_deg = std::min(degree, 5);
  b.dimser_n = std::min(degree + 1, 6);
  b.foulkes_n = std::min(degree + 1, 6);
  b.htoe_n = std::min(degree + 2, 8);
  b.spec_h = std::min(degree + 2, 8);
  b.spec_euler = std::min(degree + 1, 7);
  b.gessel_k = std::min(k, 3);    b.gessel_len = 4;
  b.whitney_n = std::min(n, 3);   b.whitney_k = std::min(k, 2);
  return b;
}

int run_verify(const std::string& suite, const Budgets& b,
               const std::string& out) {
  std::vector<wba::CheckReport> reports;
  bool any = false;
  auto want = [&](const char* name) {
    bool hit = (suite == "all" || suite == name);
    any = any || hit;
    return hit;
  };

  if (want("el")) {
    reports.push_back(wba::check_el(b.el_n, b.el_k));
  }
  if (want("dims")) {
    reports.push_back(wba::check_dims(b.dims_n, b.dims_k, nullptr));
    reports.push_back(wba::check_mobius(b.dims_n, b.dims_k));
  }
  if (want("characters")) {
    reports.push_back(wba::check_characters(b.char_n));
    reports.push_back(wba::check_symmetric_trivial(b.char_n));
  }
  if (want("series")) {
    reports.push_back(wba::check_series_identity(b.series_deg));
    reports.push_back(wba::check_dimension_series(b.dimser_n));
    reports.push_back(wba::check_foulkes(b.foulkes_n));
    reports.push_back(wba::check_h_to_e(b.htoe_n));
  }
  if (want("specializations")) {
    reports.push_back(wba::check_specializations(b.spec_h, b.spec_euler));
  }
  if (want("gessel")) {
    reports.push_back(wba::check_gessel(b.gessel_k, b.gessel_len));
  }
  if (want("whitney")) {
    reports.push_back(wba::check_whitney(b.whitney_n, b.whitney_k));
  }
  if (!any) {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return 2;
  }

  OutputTarget target;
  if (!target.open(out)) return 2;
  wba::emit_reports(reports, *target.stream, std::cerr);

  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted boolean algebra workbench"};
  app.require_subcommand(1);

  int n = 4, k = 2, degree = 4;
  std::string format = "dot", out, profile = "quick";

  auto* poset = app.add_subcommand("poset", "export a Hasse diagram");
  poset->add_option("-n,--n", n, "number of letters")->capture_default_str();
  poset->add_option("-k,--k", k, "number of colors")->capture_default_str();
  poset->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  poset->add_option("--out", out, "output file (default stdout)");
  bool with_top = false, with_labels = false;
  poset->add_flag("--top", with_top, "append the synthetic top element");
  poset->add_flag("--labels", with_labels, "annotate edges with x^i labels");

  auto* dims = app.add_subcommand("dims", "tabulate module dimensions (CSV)");
  dims->add_option("-n,--n", n, "max content size")->capture_default_str();
  dims->add_option("-k,--k", k, "number of colors")->capture_default_str();
  dims->add_option("--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  std::string suite;
  verify
      ->add_option("suite", suite,
                   "el | dims | characters | series | specializations | "
                   "gessel | whitney | all")
      ->required();
  verify->add_option("-n,--n", n, "size budget (quick profile)")
      ->capture_default_str();
  verify->add_option("-k,--k", k, "color budget (quick profile)")
      ->capture_default_str();
  verify->add_option("--degree", degree, "series degree budget (quick profile)")
      ->capture_default_str();
  verify->add_option("--profile", profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  verify->add_option("--out", out, "write report lines here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  try {
    if (poset->parsed()) {
      return run_poset(n, k, format, out, with_top, with_labels);
    }
    if (dims->parsed()) {
      return run_dims(n, k, out);
    }
    Budgets b =
        (profile == "full") ? full_budgets() : quick_budgets(n, k, degree);
    return run_verify(suite, b, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

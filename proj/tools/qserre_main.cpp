#include <CLI11.hpp>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "qserre/analysis.hpp"
#include "qserre/qnumbers.hpp"
#include "qserre/words.hpp"

namespace {

using namespace qserre;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitInternal = 4;

std::string read_spec_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw invalid_parameter("cannot open spec file: " + arg.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return arg;
}

ModuleSpec parse_spec(const std::string& arg, const Rational& default_q) {
  Json j;
  try {
    j = Json::parse(read_spec_argument(arg));
  } catch (const Json::exception& e) {
    throw invalid_parameter(std::string("malformed spec JSON: ") + e.what());
  }
  return spec_from_json(j, default_q);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_analyze(const std::string& spec_arg, const std::string& q_arg, bool pretty) {
  ModuleSpec spec = parse_spec(spec_arg, Rational::parse(q_arg));
  AnalysisReport report = analyze_spec(spec);
  if (pretty)
    std::cout << pretty_summary(report);
  else
    emit(to_json(report));
  std::cerr << "timing_ms=" << report.timing_ms << "\n";
  return kExitOk;
}

int run_scan(long d, const std::string& a_from, const std::string& a_to,
             const std::string& a_step, const std::string& q_arg, unsigned jobs) {
  const Rational q = Rational::parse(q_arg);
  require_deformation(q);
  const Rational from = Rational::parse(a_from);
  const Rational to = Rational::parse(a_to);
  const Rational step = Rational::parse(a_step);
  if (step.sign() <= 0) throw invalid_parameter("--a-step must be positive");
  if (d < 1) throw invalid_parameter("--d must be >= 1");

  std::vector<Rational> grid;
  for (Rational a = from; a <= to; a += step) grid.push_back(a);

  Json rows = Json::array();
  if (jobs > 1 && grid.size() > 1) {
    std::vector<std::future<Json>> futures;
    futures.reserve(grid.size());
    for (const Rational& a : grid)
      futures.push_back(
          std::async(std::launch::async, [d, a, q] { return scan_row(d, a, q); }));
    for (auto& f : futures) rows.push_back(f.get());
  } else {
    for (const Rational& a : grid) rows.push_back(scan_row(d, a, q));
  }
  emit(Json{{"rows", std::move(rows)}});
  return kExitOk;
}

int run_words(long max_len) {
  Json rows = Json::array();
  bool equivalence_ok = true;
  for (long n = 0; n <= max_len; ++n) {
    const auto irreducible = enumerate_irreducible(n);
    rows.push_back(Json{{"n", n},
                        {"irreducible", irreducible.size()},
                        {"total", 1ul << n}});
    for (unsigned long bits = 0; bits < (1ul << n); ++bits) {
      Word w(n, 'x');
      for (long i = 0; i < n; ++i)
        if (bits & (1ul << (n - 1 - i))) w[i] = 'y';
      if (is_reducible(w) == is_irreducible_unimodal(w)) equivalence_ok = false;
    }
  }
  emit(Json{{"rows", std::move(rows)}, {"unimodal_equivalence_ok", equivalence_ok}});
  return kExitOk;
}

int run_relations(const std::string& spec_arg, const std::string& q_arg) {
  ModuleSpec spec = parse_spec(spec_arg, Rational::parse(q_arg));
  UqRep rep = from_spec(spec);
  const Mat a = rep.e0p + rep.k0;
  const Mat astar = rep.e1p + rep.k1;
  emit(Json{{"chevalley", to_json(check_chevalley_relations(rep))},
            {"qserre", to_json(check_qserre(a, astar, spec.q))}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analyzer for nonnilpotent module pairs under the cubic q-Serre relations"};
  app.require_subcommand(1);

  std::string spec_arg, q_arg = "2/1";
  bool pretty = false;

  auto* analyze = app.add_subcommand("analyze", "full analysis of one module spec");
  analyze->add_option("--spec,spec", spec_arg, "inline spec JSON or @file")->required();
  analyze->add_option("--q", q_arg, "default q when the spec omits it");
  analyze->add_flag("--pretty", pretty, "human summary instead of JSON");

  long scan_d = 1;
  std::string a_from = "1", a_to = "0", a_step = "1";
  unsigned jobs = 1;
  auto* scan = app.add_subcommand("scan", "verdict per point of an evaluation-parameter grid");
  scan->add_option("--d", scan_d, "evaluation module dimension parameter");
  scan->add_option("--a-from", a_from, "grid start (rational)");
  scan->add_option("--a-to", a_to, "grid end, inclusive (rational)");
  scan->add_option("--a-step", a_step, "grid step (positive rational)");
  scan->add_option("--q", q_arg, "deformation parameter");
  scan->add_option("--jobs", jobs, "run rows concurrently when > 1");

  long max_len = 8;
  auto* words = app.add_subcommand("words", "irreducible word counts per length");
  words->add_option("--max-len", max_len, "largest word length (<= 16)");

  auto* relations = app.add_subcommand("relations", "defining-relation report for one spec");
  relations->add_option("--spec,spec", spec_arg, "inline spec JSON or @file")->required();
  relations->add_option("--q", q_arg, "default q when the spec omits it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze->parsed()) return run_analyze(spec_arg, q_arg, pretty);
    if (scan->parsed()) return run_scan(scan_d, a_from, a_to, a_step, q_arg, jobs);
    if (words->parsed()) return run_words(max_len);
    if (relations->parsed()) return run_relations(spec_arg, q_arg);
  } catch (const invalid_parameter& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const precondition_error& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include "cli.hpp"
#include "mixent/mixing.hpp"
#include "mixent/oracle.hpp"
#include "mixent/scenario_io.hpp"
#include "mixent/statmech.hpp"
#include "reference.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mixent;
using namespace mixent::mixing;
using namespace mixent::statmech;

namespace {

const std::string kScenarios = MIXENT_SCENARIO_DIR;

struct Outcome {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  std::function<Outcome()> check;
};

std::string fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Column `name` of a CSV document with a header row.
std::vector<double> csv_column(const std::string& csv, const std::string& name) {
  std::istringstream in(csv);
  std::string line, cell;
  std::getline(in, line);
  std::istringstream header(line);
  int col = 0, found = -1;
  while (std::getline(header, cell, ','))
    if (cell == name) found = col;
    else ++col;
  std::vector<double> values;
  if (found < 0) return values;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    for (int i = 0; i <= found; ++i) std::getline(row, cell, ',');
    values.push_back(std::stod(cell));
  }
  return values;
}

// The library value must hit the target within tol, and the CLI must print
// the same number at its 12-digit precision.
Outcome mix_matches(const std::string& file, double target, double tol) {
  const auto report = mixing_entropy(io::load_scenario(kScenarios + "/" + file));
  const auto run = cli_run({"mix", "--scenario", kScenarios + "/" + file});
  const auto printed = csv_column(run.out, "delta_S");
  Outcome o;
  o.passed = run.code == 0 && printed.size() == 1 && std::fabs(report.delta_S - target) <= tol &&
             std::fabs(printed[0] - report.delta_S) <= 1e-11 * std::max(1.0, std::fabs(target));
  o.detail = fmt("dS = %.12f (target %.9f, tol %.0e)", report.delta_S, target, tol);
  return o;
}

double ln2() { return std::numbers::ln2; }

Outcome paradox() { return mix_matches("insertion-distinguishable.yaml", -1000 * ln2(), 1e-9); }

Outcome resolution() {
  const auto report = mixing_entropy(io::load_scenario(kScenarios + "/insertion-gibbs.yaml"));
  const auto direct = partition_change_entropy(1000, 2.0, 1.0, 2, CountingModel::GibbsCorrected);
  Outcome o;
  o.passed = report.S_final.stirling_form == StirlingForm::TwoTerm && std::fabs(report.delta_S) < 1e-9 &&
             std::fabs(direct.delta_S) < 1e-9;
  o.detail = fmt("dS = %.3g (form %s)", report.delta_S,
                 std::string(to_string(report.S_final.stirling_form)).c_str());
  return o;
}

// r = N ln 2 - ln C(N, N/2). Insertion loses r, removal gains r.
Outcome exact_residual() {
  Outcome o;
  for (unsigned N : {100u, 1000u, 10000u}) {
    const double r = static_cast<double>(N * boost::multiprecision::log(reference::Float50(2)) -
                                         reference::log_binomial_50(N, N / 2));
    const auto insert = partition_change_entropy(N, 2.0, 1.0, 2, CountingModel::GibbsCorrected, StirlingForm::Exact);
    MixingScenario s;
    s.initial = {{"gas", N / 2, 1.0, 1.0}, {"gas", N / 2, 1.0, 1.0}};
    s.final_volume = 2.0;
    s.stirling_form = StirlingForm::Exact;
    const auto removal = mixing_entropy(s);
    const double asymptote = 0.5 * std::log(std::numbers::pi * N / 2.0);
    const bool ok = r > 0 && std::fabs(-insert.delta_S - r) <= 1e-9 * N &&
                    std::fabs(removal.delta_S - r) <= 1e-9 * N && std::fabs(r - asymptote) <= 0.01 * asymptote &&
                    (N != 1000 || r / N < 0.005);
    o.passed = o.passed && ok;
    o.detail += fmt("N=%u r=%.9f (asym %.9f)%s ", N, removal.delta_S, asymptote, N == 1000 ? fmt(" r/N=%.5f", r / N).c_str() : "");
  }
  return o;
}

Outcome distinct_full() { return mix_matches("distinct-full.yaml", 2000 * ln2(), 1e-9); }
Outcome distinct_halves() { return mix_matches("distinct-halves.yaml", 1000 * ln2(), 1e-9); }

Outcome overlap_sweep() {
  const auto run = cli_run({"sweep-overlap", "--scenario", kScenarios + "/distinct-halves.yaml", "--points", "101"});
  const auto dS = csv_column(run.out, "delta_S");
  const auto q = csv_column(run.out, "overlap");
  Outcome o;
  if (run.code != 0 || dS.size() != 101 || q.size() != 101) return {false, "sweep produced no table"};
  bool monotone = true;
  for (std::size_t i = 1; i < dS.size(); ++i) monotone = monotone && dS[i] <= dS[i - 1];
  // Midpoint from the library at full precision.
  auto s = io::load_scenario(kScenarios + "/distinct-halves.yaml");
  s.overlaps = {{"A", "B", 0.5}};
  const double mid = mixing_entropy(s).delta_S;
  o.passed = monotone && std::fabs(dS.front() - 1000 * ln2()) <= 1e-8 && dS.back() == 0.0 && q[50] == 0.5 &&
             std::fabs(mid - 519.860385420) <= 1e-6 && std::fabs(dS[50] - mid) <= 1e-8;
  o.detail = fmt("dS(0)=%.9f dS(0.5)=%.9f dS(1)=%.3g monotone=%s", dS.front(), mid, dS.back(),
                 monotone ? "yes" : "no");
  return o;
}

Outcome spin_field() {
  const auto off = mixing_entropy(spin_field_scenario(1000, 2.0, 1.0, false));
  const auto on = mixing_entropy(spin_field_scenario(1000, 2.0, 1.0, true));
  const auto off_file = mixing_entropy(io::load_scenario(kScenarios + "/spin-field-off.yaml"));
  const auto on_file = mixing_entropy(io::load_scenario(kScenarios + "/spin-field-on.yaml"));
  Outcome o;
  o.passed = off.delta_S == 0.0 && off_file.delta_S == 0.0 && std::fabs(on.delta_S - 1000 * ln2()) <= 1e-9 &&
             on_file.delta_S == on.delta_S && on.separation_work == on.delta_S &&
             separation_work(on.delta_S, 1.0) == on.delta_S;
  o.detail = fmt("off %.3g, on %.12f, work %.12f", off.delta_S, on.delta_S, on.separation_work);
  return o;
}

Outcome counting_chain() {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> energy(0.0, 5.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<LevelSpec> levels(1 + rng() % 8);
    for (auto& l : levels) l = {energy(rng), 1 + rng() % 20};
    const EnsembleSpec ens(levels, 10 + rng() % 100000, 0.2 + energy(rng));
    const double counting = entropy_via_occupations(ens);
    const double thermo = entropy_via_partition_function(ens);
    worst = std::max(worst, std::fabs(counting - thermo) / std::fabs(thermo));
  }
  return {worst < 1e-9, fmt("worst relative gap %.2e over 100 ensembles", worst)};
}

Outcome bose_limit() {
  std::mt19937_64 rng(77);
  double worst = 0.0, min_ratio = INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t N = 10 + rng() % 5000;
    std::vector<LevelSpec> levels(1 + rng() % 6);
    for (auto& l : levels) l = {static_cast<double>(rng() % 200) / 40.0, N * 10000 + rng() % 100000};
    const EnsembleSpec ens(levels, N, 0.5 + static_cast<double>(rng() % 100) / 25.0);
    const auto n = occupations(ens);
    for (std::size_t i = 0; i < n.size(); ++i)
      if (n[i] > 0) min_ratio = std::min(min_ratio, levels[i].degeneracy / n[i]);
    for (auto form : {StirlingForm::TwoTerm, StirlingForm::ThreeTerm, StirlingForm::Exact}) {
      const double bose = entropy_from_levels(ens, CountingModel::BoseApproximate, form).S;
      const double gibbs = entropy_from_levels(ens, CountingModel::GibbsCorrected, form).S;
      worst = std::max(worst, std::fabs(bose - gibbs) / std::fabs(gibbs));
    }
  }
  return {min_ratio >= 1e4 && worst < 1e-6, fmt("worst relative gap %.2e, min g/n %.3g", worst, min_ratio)};
}

Outcome oracle_equivalence() {
  const auto clean = cli_run({"oracle-check", "--max-n", "8"});
  Outcome o;
  o.passed = clean.code == 0 && clean.out.find("all identities verified") != std::string::npos;
  int caught = 0;
  for (const char* fault : {"binomial", "multiplicity", "bose", "symbols"}) {
    const auto bad = cli_run({"oracle-check", "--max-n", "8", "--inject-fault", fault});
    if (bad.code != 0 && bad.err.find("counterexample") != std::string::npos) ++caught;
  }
  const auto report = oracle::verify_suite(8);
  o.passed = o.passed && caught == 4 && report.passed();
  o.detail = fmt("%llu cases verified, %d/4 mutations caught", static_cast<unsigned long long>(report.cases()), caught);
  return o;
}

Outcome extensivity() {
  Outcome o;
  double worst = 0.0;
  for (double lambda : {2.0, 3.0, 10.0}) {
    const double whole = ideal_gas_entropy(lambda * 100, lambda * 1.0, 1.0, CountingModel::GibbsCorrected).S;
    const double scaled = lambda * ideal_gas_entropy(100, 1.0, 1.0, CountingModel::GibbsCorrected).S;
    worst = std::max(worst, std::fabs(whole - scaled) / std::fabs(scaled));
  }
  const double defect = ideal_gas_entropy(200, 2.0, 1.0, CountingModel::Distinguishable).S -
                        2 * ideal_gas_entropy(100, 1.0, 1.0, CountingModel::Distinguishable).S;
  o.passed = worst <= 1e-12 && std::fabs(defect - 200 * ln2()) <= 1e-9;
  o.detail = fmt("worst relative gap %.2e, defect %.9f", worst, defect);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "same-gas insertion, labeled counting", paradox},
      {2, "same-gas insertion, corrected counting", resolution},
      {3, "exact-factorial residual", exact_residual},
      {4, "distinct species, N = 1000 each", distinct_full},
      {5, "distinct species, N = 500 each", distinct_halves},
      {6, "overlap sweep", overlap_sweep},
      {7, "spin field on/off", spin_field},
      {8, "counting chain vs partition function", counting_chain},
      {9, "Bose limit", bose_limit},
      {10, "oracle equivalence and mutations", oracle_equivalence},
      {11, "extensivity", extensivity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failures;
    std::printf("%s %2d %-40s %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", c.number, c.title.c_str(),
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

#include "cli.hpp"

#include "mixent/combinatorics.hpp"
#include "mixent/errors.hpp"
#include "mixent/mixing.hpp"
#include "mixent/oracle.hpp"
#include "mixent/records.hpp"
#include "mixent/scenario_io.hpp"
#include "mixent/statmech.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace mixent::cli {

namespace {

using combinatorics::OccupationVector;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint64_t> parse_uint_list(const std::string& text, const char* flag) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw UsageError(std::string(flag) + ": '" + item + "' is not a nonnegative integer");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(std::string(flag) + " is empty");
  return out;
}

std::vector<statmech::LevelSpec> parse_levels(const std::string& text) {
  std::vector<statmech::LevelSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("--levels entries must be energy:degeneracy");
    statmech::LevelSpec level;
    const std::string e = item.substr(0, colon);
    const std::string g = item.substr(colon + 1);
    auto [p1, ec1] = std::from_chars(e.data(), e.data() + e.size(), level.energy);
    auto [p2, ec2] = std::from_chars(g.data(), g.data() + g.size(), level.degeneracy);
    if (ec1 != std::errc() || p1 != e.data() + e.size() || ec2 != std::errc() ||
        p2 != g.data() + g.size())
      throw UsageError("--levels: cannot parse '" + item + "'");
    out.push_back(level);
  }
  if (out.empty()) throw UsageError("--levels is empty");
  return out;
}

io::UnitSystem units() {
  try {
    return io::units_from_environment();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void row(std::ostream& out, std::string_view key, const std::string& value,
         std::string_view unit = {}) {
  out << std::left << std::setw(15) << key << value;
  if (!unit.empty()) out << "  " << unit;
  out << '\n';
}

// Operands ------------------------------------------------------------------

struct CountArgs {
  std::string kind;
  std::vector<std::uint64_t> operands;
  std::string occ;
  std::string deg;
  bool corrected = false;
  std::uint64_t exact_limit = 5000;
};

std::pair<std::uint64_t, std::uint64_t> two_operands(const CountArgs& a) {
  if (a.operands.size() != 2)
    throw UsageError("--kind " + a.kind + " takes exactly two integer operands");
  return {a.operands[0], a.operands[1]};
}

int cmd_count(const CountArgs& a, std::ostream& out) {
  const combinatorics::CountOptions opts{a.exact_limit};
  std::string value;
  double log_value = 0.0;

  if (a.kind == "multiplicity") {
    if (a.occ.empty() || a.deg.empty())
      throw UsageError("--kind multiplicity needs --occ and --deg");
    const OccupationVector occ(parse_uint_list(a.occ, "--occ"));
    const auto deg = parse_uint_list(a.deg, "--deg");
    if (a.corrected) {
      const auto c = combinatorics::multiplicity_gibbs_corrected(occ, deg, opts);
      value = c.str();
      log_value = c.log_value;
    } else {
      const auto c = combinatorics::multiplicity_distinguishable(occ, deg, opts);
      value = c.str();
      log_value = c.log_value();
    }
  } else if (a.kind == "bose-approx") {
    const auto [n, g] = two_operands(a);
    value = "log-only";
    log_value = combinatorics::multiplicity_bose_approx(n, g);
  } else {
    const auto [x, y] = two_operands(a);
    Count c;
    if (a.kind == "binomial")
      c = combinatorics::binomial(x, y, opts);
    else if (a.kind == "bose")
      c = combinatorics::multiplicity_bose_exact(x, y, opts);
    else if (a.kind == "symbols")
      c = combinatorics::classical_symbol_states(x, y, opts);
    else
      throw UsageError("unknown --kind '" + a.kind + "'");
    value = c.str();
    log_value = c.log_value();
  }

  row(out, "kind", a.kind + (a.corrected ? " (gibbs-corrected)" : ""));
  row(out, "value", value);
  row(out, "ln_value", io::format_number(log_value));
  return kSuccess;
}

struct EntropyArgs {
  double n = 0.0;
  double v = 0.0;
  double t = 1.0;
  std::string model = "gibbs-corrected";
  std::string stirling = "two-term";
  std::string levels;
};

int cmd_entropy(const EntropyArgs& a, std::ostream& out) {
  const auto units = cli::units();
  const double k = units == io::UnitSystem::SI ? io::kBoltzmannSI : 1.0;
  const auto su = io::entropy_unit(units);
  const auto model = statmech::parse_counting_model(a.model);
  const auto form = statmech::parse_stirling_form(a.stirling);

  statmech::EntropyResult r;
  if (!a.levels.empty()) {
    if (a.n < 1.0 || a.n != static_cast<double>(static_cast<std::uint64_t>(a.n)))
      throw DomainError("--n must be a positive integer");
    const statmech::EnsembleSpec ens(parse_levels(a.levels), static_cast<std::uint64_t>(a.n), a.t);
    r = statmech::entropy_from_levels(ens, model, form);
    row(out, "ln_Z", io::format_number(statmech::log_partition_function(ens.levels(), a.t)));
    row(out, "U", io::format_number(k * statmech::internal_energy(ens)), io::energy_unit(units));
    row(out, "F", io::format_number(k * statmech::helmholtz_free_energy(ens, model, form)),
        io::energy_unit(units));
  } else {
    if (a.v <= 0.0) throw UsageError("entropy needs --v (ideal gas) or --levels");
    r = statmech::ideal_gas_entropy(a.n, a.v, a.t, model, form);
  }
  row(out, "model", std::string(statmech::to_string(r.model)));
  row(out, "stirling_form", std::string(statmech::to_string(r.stirling_form)));
  row(out, "S", io::format_number(k * r.S), su);
  row(out, "per_particle", io::format_number(k * r.per_particle), su);
  return kSuccess;
}

void emit(const std::vector<io::OutputRecord>& records, const std::string& format,
          std::ostream& out) {
  out << (format == "json" ? io::to_json(records) : io::to_csv(records));
}

int cmd_mix(const std::string& path, const std::string& format, std::ostream& out) {
  const auto units = cli::units();
  const auto s = io::load_scenario(path);
  const auto report = mixing::mixing_entropy(s);
  emit({io::make_record(s, report, units)}, format, out);
  return kSuccess;
}

int cmd_sweep(const std::string& path, int points, const std::string& weighting,
              const std::string& format, std::ostream& out) {
  if (points < 2) throw UsageError("--points must be at least 2");
  const auto units = cli::units();
  auto s = io::load_scenario(path);
  if (!weighting.empty()) s.weighting = mixing::parse_weighting(weighting);

  std::vector<std::string> species;
  for (const auto& c : s.initial)
    if (std::find(species.begin(), species.end(), c.species) == species.end())
      species.push_back(c.species);

  std::vector<io::OutputRecord> records;
  for (int k = 0; k < points; ++k) {
    const double q = static_cast<double>(k) / static_cast<double>(points - 1);
    s.overlaps.clear();
    for (std::size_t i = 0; i < species.size(); ++i)
      for (std::size_t j = i + 1; j < species.size(); ++j)
        s.overlaps.push_back({species[i], species[j], q});
    auto rec = io::make_record(s, mixing::mixing_entropy(s), units);
    rec.overlap = q;
    records.push_back(std::move(rec));
  }
  emit(records, format, out);
  return kSuccess;
}

oracle::Formulas faulty_formulas(const std::string& fault) {
  auto f = oracle::Formulas::library();
  if (fault.empty()) return f;
  if (fault == "binomial") {
    f.binomial = [](std::uint64_t N, std::uint64_t n) { return combinatorics::binomial(N + 1, n); };
  } else if (fault == "multiplicity") {
    f.multiplicity = [](const OccupationVector& occ, std::span<const std::uint64_t> g) {
      const auto c = combinatorics::multiplicity_distinguishable(occ, g);
      return Count(*c.value() * (occ.total() + 1));  // (N+1)! in place of N!
    };
  } else if (fault == "bose") {
    f.bose = [](std::uint64_t n, std::uint64_t g) { return combinatorics::binomial(n + g, n); };
  } else if (fault == "symbols") {
    f.symbols = [](std::uint64_t n, std::uint64_t g) {
      return combinatorics::classical_symbol_states(n, g + 1);
    };
  } else {
    throw UsageError("unknown --inject-fault '" + fault + "'");
  }
  return f;
}

int cmd_oracle_check(std::uint64_t max_n, const std::string& fault, std::ostream& out,
                     std::ostream& err) {
  const auto report = oracle::verify_suite(max_n, faulty_formulas(fault));

  std::vector<std::pair<std::string, std::uint64_t>> totals;
  for (const auto& c : report.checks) {
    auto it = std::find_if(totals.begin(), totals.end(),
                           [&](const auto& t) { return t.first == c.identity; });
    if (it == totals.end())
      totals.emplace_back(c.identity, c.cases);
    else
      it->second += c.cases;
  }
  out << std::left << std::setw(14) << "identity" << std::setw(10) << "cases" << "status\n";
  for (const auto& [name, cases] : totals) {
    bool ok = true;
    for (const auto& c : report.checks)
      if (c.identity == name && !c.passed) ok = false;
    out << std::left << std::setw(14) << name << std::setw(10) << cases << (ok ? "ok" : "FAILED")
        << '\n';
  }

  if (const auto* bad = report.first_failure()) {
    err << "counterexample [" << bad->identity << "]: " << bad->counterexample << '\n';
    return kDomainError;
  }
  out << "all identities verified (N <= " << max_n << ", "
      << oracle::standard_cell_suite().size() << " cell specs, " << report.cases()
      << " cases)\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Microstate counts and entropies of mixing for ideal gases", "mixent"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Exact and asymptotic microstate counts");
  count->add_option("--kind", count_args.kind, "What to count")
      ->required()
      ->check(CLI::IsMember({"binomial", "multiplicity", "bose", "bose-approx", "symbols"}));
  count->add_option("operands", count_args.operands, "Integer operands, e.g. N n");
  count->add_option("--occ", count_args.occ, "Occupations for multiplicity, comma separated");
  count->add_option("--deg", count_args.deg, "Degeneracies for multiplicity, comma separated");
  count->add_flag("--corrected", count_args.corrected, "Divide the multiplicity by N!");
  count->add_option("--exact-limit", count_args.exact_limit,
                    "Largest N for which exact big-integer values are produced");

  EntropyArgs entropy_args;
  auto* entropy = app.add_subcommand("entropy", "Ideal-gas or level-set entropy");
  entropy->add_option("--n", entropy_args.n, "Particle number")->required();
  entropy->add_option("--v", entropy_args.v, "Volume (ideal gas)");
  entropy->add_option("--t", entropy_args.t, "Temperature (reduced)");
  entropy->add_option("--model", entropy_args.model, "Counting model");
  entropy->add_option("--stirling", entropy_args.stirling, "Factorial form");
  entropy->add_option("--levels", entropy_args.levels, "Level set as energy:degeneracy,...");

  std::string scenario_path;
  std::string format = "csv";
  auto* mix = app.add_subcommand("mix", "Entropy change of a mixing scenario");
  mix->add_option("--scenario", scenario_path, "Scenario file")->required();
  mix->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  int points = 0;
  std::string weighting;
  auto* sweep = app.add_subcommand("sweep-overlap", "Evaluate a scenario over overlaps in [0, 1]");
  sweep->add_option("--scenario", scenario_path, "Scenario file")->required();
  sweep->add_option("--points", points, "Number of equally spaced overlaps")->required();
  sweep->add_option("--weighting", weighting, "Override the scenario's weighting")
      ->check(CLI::IsMember({"complement", "literal"}));
  sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::uint64_t max_n = 8;
  std::string fault;
  auto* check = app.add_subcommand("oracle-check", "Verify closed forms against enumeration");
  check->add_option("--max-n", max_n, "Largest particle number enumerated");
  check->add_option("--inject-fault", fault,
                    "Testing aid: break one formula (binomial, multiplicity, bose, symbols)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*count) return cmd_count(count_args, out);
    if (*entropy) return cmd_entropy(entropy_args, out);
    if (*mix) return cmd_mix(scenario_path, format, out);
    if (*sweep) return cmd_sweep(scenario_path, points, weighting, format, out);
    if (*check) return cmd_oracle_check(max_n, fault, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << '\n';
    return kDomainError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace mixent::cli

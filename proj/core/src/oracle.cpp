#include "mixent/oracle.hpp"

#include "mixent/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mixent::oracle {

namespace {

// base^exp, or guard + 1 if it would exceed guard.
std::uint64_t bounded_power(std::uint64_t base, std::uint64_t exp, std::uint64_t guard) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > guard / base) return guard + 1;
    r *= base;
  }
  return r;
}

std::string occupation_str(const OccupationVector& occ) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < occ.size(); ++i) os << (i ? "," : "") << occ[i];
  os << ')';
  return os.str();
}

// Tallies occupation patterns in a dense (N+1)^m table indexed mixed-radix.
class OccupationTally {
 public:
  OccupationTally(std::uint64_t N, std::size_t cells) : radix_(N + 1), stride_(cells) {
    std::uint64_t size = 1;
    for (std::size_t c = 0; c < cells; ++c) {
      stride_[c] = size;
      size *= radix_;
    }
    counts_.assign(size, 0);
  }

  std::uint64_t stride(std::size_t cell) const { return stride_[cell]; }
  void add(std::uint64_t index, std::uint64_t n = 1) { counts_[index] += n; }

  EnumerationResult result() const {
    EnumerationResult r;
    for (std::uint64_t idx = 0; idx < counts_.size(); ++idx) {
      if (counts_[idx] == 0) continue;
      std::vector<std::uint64_t> occ(stride_.size());
      std::uint64_t rest = idx;
      for (std::size_t c = 0; c < occ.size(); ++c) {
        occ[c] = rest % radix_;
        rest /= radix_;
      }
      r.by_occupation.emplace(OccupationVector(std::move(occ)), counts_[idx]);
      r.total += counts_[idx];
    }
    return r;
  }

 private:
  std::uint64_t radix_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::uint64_t> counts_;
};

std::vector<std::size_t> substate_cells(const CellSpec& cells) {
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::uint64_t k = 0; k < cells.degeneracies()[c]; ++k) owner.push_back(c);
  return owner;
}

// Compositions of `remaining` over sub-states [pos, G), tallying cell occupation.
void compose(std::uint64_t remaining, std::size_t pos, const std::vector<std::size_t>& owner,
             std::uint64_t index, OccupationTally& tally) {
  if (pos + 1 == owner.size()) {
    tally.add(index + remaining * tally.stride(owner[pos]));
    return;
  }
  for (std::uint64_t k = 0; k <= remaining; ++k)
    compose(remaining - k, pos + 1, owner, index + k * tally.stride(owner[pos]), tally);
}

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::string big_str(const Count& c) { return c.str(); }

}  // namespace

CellSpec::CellSpec(std::vector<std::uint64_t> degeneracies) : cells_(std::move(degeneracies)) {
  if (cells_.empty()) throw DomainError("cell spec needs at least one cell");
  for (auto g : cells_) {
    if (g == 0) throw DomainError("cell degeneracy must be >= 1");
    substates_ += g;
  }
}

std::string CellSpec::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < cells_.size(); ++i) os << (i ? "," : "") << cells_[i];
  os << ')';
  return os.str();
}

EnumerationResult enumerate_assignments(std::uint64_t N, const CellSpec& cells) {
  const std::uint64_t G = cells.substates();
  if (bounded_power(G, N, kAssignmentGuard) > kAssignmentGuard)
    throw GuardError("enumerate_assignments: " + std::to_string(G) + "^" + std::to_string(N) +
                     " assignments exceeds the guard of " + std::to_string(kAssignmentGuard) +
                     "; reduce N or the number of sub-states");

  const auto owner = substate_cells(cells);
  OccupationTally tally(N, cells.size());

  // Odometer over particle -> sub-state, every particle starting in sub-state 0.
  std::vector<std::uint64_t> digit(N, 0);
  std::uint64_t index = N * tally.stride(owner[0]);
  while (true) {
    tally.add(index);
    std::uint64_t p = 0;
    while (p < N) {
      const std::size_t from = owner[digit[p]];
      if (++digit[p] < G) {
        index = index - tally.stride(from) + tally.stride(owner[digit[p]]);
        break;
      }
      digit[p] = 0;
      index = index - tally.stride(from) + tally.stride(owner[0]);
      ++p;
    }
    if (p == N) break;
  }
  return tally.result();
}

EnumerationResult enumerate_indistinct(std::uint64_t N, const CellSpec& cells) {
  const std::uint64_t G = cells.substates();
  // Multisets of size N over G sub-states: C(N + G - 1, N), built up exactly.
  __extension__ using Wide = unsigned __int128;
  Wide patterns = 1;
  for (std::uint64_t k = 1; k <= N; ++k) {
    patterns = patterns * (G - 1 + k) / k;
    if (patterns > kPatternGuard)
      throw GuardError("enumerate_indistinct: more than " + std::to_string(kPatternGuard) +
                       " occupation patterns for N = " + std::to_string(N) + " over " +
                       std::to_string(G) + " sub-states; reduce N or the number of sub-states");
  }

  const auto owner = substate_cells(cells);
  OccupationTally tally(N, cells.size());
  compose(N, 0, owner, 0, tally);
  return tally.result();
}

Formulas Formulas::library() {
  Formulas f;
  f.binomial = [](std::uint64_t N, std::uint64_t n) { return combinatorics::binomial(N, n); };
  f.multiplicity = [](const OccupationVector& occ, std::span<const std::uint64_t> g) {
    return combinatorics::multiplicity_distinguishable(occ, g);
  };
  f.bose = [](std::uint64_t n, std::uint64_t g) { return combinatorics::multiplicity_bose_exact(n, g); };
  f.symbols = [](std::uint64_t n, std::uint64_t g) {
    return combinatorics::classical_symbol_states(n, g);
  };
  return f;
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const IdentityCheck* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::uint64_t VerificationReport::cases() const {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.cases;
  return n;
}

VerificationReport verify_counting(std::uint64_t N, const CellSpec& cells, const Formulas& formulas) {
  VerificationReport report;
  const std::uint64_t G = cells.substates();
  const auto g = cells.degeneracies();
  const auto prefix = "N=" + std::to_string(N) + " cells=" + cells.str() + " ";

  auto start = [&](const char* name) -> IdentityCheck& {
    report.checks.push_back({name, N, cells.str(), 0, true, {}});
    return report.checks.back();
  };
  auto compare = [&](IdentityCheck& check, const BigInt& enumerated, const Count& formula,
                     const std::string& where) {
    ++check.cases;
    if (!check.passed) return;
    if (!formula.value() || *formula.value() != enumerated) {
      check.passed = false;
      check.counterexample = prefix + where + ": enumerated " + enumerated.str() +
                             ", formula " + big_str(formula);
    }
  };

  const auto labeled = enumerate_assignments(N, cells);

  {
    auto& check = start("binomial");
    std::vector<std::uint64_t> by_first(N + 1, 0);
    for (const auto& [occ, count] : labeled.by_occupation) by_first[occ[0]] += count;
    for (std::uint64_t n = 0; n <= N; ++n) {
      const Count c = formulas.binomial(N, n);
      // Scale the formula by the sub-state choices inside and outside cell 0.
      const BigInt scale = big_pow(g[0], n) * big_pow(G - g[0], N - n);
      const Count scaled = c.value() ? Count(*c.value() * scale) : c;
      compare(check, by_first[n], scaled, "n0=" + std::to_string(n));
    }
  }

  {
    auto& check = start("multiplicity");
    for (const auto& [occ, count] : labeled.by_occupation)
      compare(check, count, formulas.multiplicity(occ, g), "occupation=" + occupation_str(occ));
  }

  {
    auto& check = start("bose");
    const auto unlabeled = enumerate_indistinct(N, cells);
    for (const auto& [occ, count] : unlabeled.by_occupation) {
      BigInt product = 1;
      bool exact = true;
      for (std::size_t i = 0; i < occ.size(); ++i) {
        const Count c = formulas.bose(occ[i], g[i]);
        if (!c.value()) {
          exact = false;
          break;
        }
        product *= *c.value();
      }
      compare(check, count, exact ? Count(product) : Count::log_only(0.0),
              "occupation=" + occupation_str(occ));
    }
    compare(check, unlabeled.total, formulas.bose(N, G), "total");
  }

  {
    auto& check = start("symbols");
    compare(check, labeled.total, formulas.symbols(N, G), "total");
    // The enumeration itself must produce G^N.
    compare(check, labeled.total, Count(big_pow(G, N)), "enumeration total");
  }

  {
    auto& check = start("doubling");
    std::vector<std::uint64_t> doubled(g.begin(), g.end());
    doubled.insert(doubled.end(), g.begin(), g.end());
    const auto wide = enumerate_assignments(N, CellSpec(doubled));
    compare(check, wide.total, Count(big_pow(2, N) * labeled.total), "2G total");
    ++check.cases;
    const double dS = log_of(BigInt(wide.total)) - log_of(BigInt(labeled.total));
    const double expected = static_cast<double>(N) * std::numbers::ln2;
    if (check.passed && std::fabs(dS - expected) > 1e-12 * std::max(1.0, expected)) {
      check.passed = false;
      check.counterexample = prefix + "ln ratio " + std::to_string(dS) + " != N ln 2";
    }
  }

  return report;
}

std::vector<CellSpec> standard_cell_suite() {
  return {CellSpec{1, 1}, CellSpec{2, 1}, CellSpec{2, 2}, CellSpec{1, 1, 1}, CellSpec{3, 2}};
}

VerificationReport verify_suite(std::uint64_t max_n, const Formulas& formulas) {
  VerificationReport all;
  for (const auto& cells : standard_cell_suite())
    for (std::uint64_t N = 0; N <= max_n; ++N) {
      auto r = verify_counting(N, cells, formulas);
      all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
    }
  return all;
}

}  // namespace mixent::oracle

#pragma once

#include "mixent/combinatorics.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

// Exhaustive enumeration of small systems, used as ground truth for the
// closed-form counts. Nothing here calls into combinatorics except
// verify_counting, which compares the two.
namespace mixent::oracle {

using combinatorics::OccupationVector;

inline constexpr std::uint64_t kAssignmentGuard = 100'000'000;
inline constexpr std::uint64_t kPatternGuard = 10'000'000;

/// Degeneracy per cell. At least one cell, every entry >= 1.
class CellSpec {
 public:
  explicit CellSpec(std::vector<std::uint64_t> degeneracies);
  CellSpec(std::initializer_list<std::uint64_t> degeneracies)
      : CellSpec(std::vector<std::uint64_t>(degeneracies)) {}

  std::span<const std::uint64_t> degeneracies() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  std::uint64_t substates() const noexcept { return substates_; }
  std::string str() const;

 private:
  std::vector<std::uint64_t> cells_;
  std::uint64_t substates_ = 0;
};

struct EnumerationResult {
  std::map<OccupationVector, std::uint64_t> by_occupation;
  std::uint64_t total = 0;

  std::uint64_t count(const OccupationVector& occ) const {
    auto it = by_occupation.find(occ);
    return it == by_occupation.end() ? 0 : it->second;
  }
};

/// Every assignment of N labeled particles to sub-states, grouped by cell
/// occupation. Throws GuardError if (sum g)^N exceeds kAssignmentGuard.
EnumerationResult enumerate_assignments(std::uint64_t N, const CellSpec& cells);

/// Every multiset of N unlabeled particles over the sub-states (one count
/// per physically distinct configuration), grouped by cell occupation.
/// Throws GuardError if the number of multisets exceeds kPatternGuard.
EnumerationResult enumerate_indistinct(std::uint64_t N, const CellSpec& cells);

/// The closed forms under test. Tests substitute deliberately broken
/// versions to confirm the verifier catches them.
struct Formulas {
  std::function<mixent::Count(std::uint64_t, std::uint64_t)> binomial;
  std::function<mixent::Count(const OccupationVector&, std::span<const std::uint64_t>)>
      multiplicity;
  std::function<mixent::Count(std::uint64_t, std::uint64_t)> bose;
  std::function<mixent::Count(std::uint64_t, std::uint64_t)> symbols;

  static Formulas library();
};

struct IdentityCheck {
  std::string identity;
  std::uint64_t N = 0;
  std::string cells;
  std::uint64_t cases = 0;
  bool passed = true;
  std::string counterexample;
};

struct VerificationReport {
  std::vector<IdentityCheck> checks;

  bool passed() const;
  /// First failing check, or nullptr.
  const IdentityCheck* first_failure() const;
  std::uint64_t cases() const;
};

/// Compare enumeration against the closed forms for one (N, cells):
///   binomial      assignments with n particles in cell 0
///                 == C(N, n) g0^n (G - g0)^(N - n)
///   multiplicity  per occupation == N! prod g^n / prod n!
///   bose          per occupation == prod C(n_i + g_i - 1, n_i)
///   symbols       total == G^N
///   doubling      ln total(2G) - ln total(G) == N ln 2
VerificationReport verify_counting(std::uint64_t N, const CellSpec& cells,
                                   const Formulas& formulas = Formulas::library());

/// The fixed cell suite: (1,1), (2,1), (2,2), (1,1,1), (3,2).
std::vector<CellSpec> standard_cell_suite();

/// verify_counting over N = 0..max_n for every cell spec in the suite.
VerificationReport verify_suite(std::uint64_t max_n, const Formulas& formulas = Formulas::library());

}  // namespace mixent::oracle

#pragma once

#include "mixent/count.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace mixent::combinatorics {

/// Counts computed from N above this are always log-only.
inline constexpr std::uint64_t kLogOnlyThreshold = 20000;

/// Controls when exact big-integer values are materialized. The limit is
/// clamped to kLogOnlyThreshold.
struct CountOptions {
  std::uint64_t exact_limit = 5000;

  bool exact_for(std::uint64_t n) const noexcept {
    return n <= exact_limit && n <= kLogOnlyThreshold;
  }
};

/// Which approximation to ln N! is in force. The tag travels with every
/// entropy result, since "Delta S = 0" claims hold only under TwoTerm.
enum class StirlingForm {
  TwoTerm,    ///< N ln N - N
  ThreeTerm,  ///< N ln N - N + 1/2 ln(2 pi N)
  Exact,      ///< ln Gamma(N + 1)
};

/// Particle numbers per single-particle state class. The total is derived,
/// so sum(counts) == total() holds by construction.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<std::uint64_t> counts);
  OccupationVector(std::initializer_list<std::uint64_t> counts)
      : OccupationVector(std::vector<std::uint64_t>(counts)) {}

  /// Throws DomainError if sum(counts) != total.
  OccupationVector(std::vector<std::uint64_t> counts, std::uint64_t total);

  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t operator[](std::size_t i) const { return counts_[i]; }
  std::uint64_t total() const noexcept { return total_; }

  auto operator<=>(const OccupationVector& other) const { return counts_ <=> other.counts_; }
  bool operator==(const OccupationVector& other) const { return counts_ == other.counts_; }

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// N! / (n! (N-n)!). Throws DomainError for n > N.
Count binomial(std::uint64_t N, std::uint64_t n, const CountOptions& opts = {});

/// N! prod g_i^{n_i} / prod n_i!: labeled particles over degenerate cells.
Count multiplicity_distinguishable(const OccupationVector& occ,
                                   std::span<const std::uint64_t> degeneracies,
                                   const CountOptions& opts = {});

/// multiplicity_distinguishable / N!. The log value is defined as the
/// distinguishable log minus log_factorial_exact(N); the exact rational is
/// attached when the distinguishable count was exact. The result is not an
/// integer in general, e.g. occupation (2,0) gives 1/2.
RationalCount multiplicity_gibbs_corrected(const OccupationVector& occ,
                                           std::span<const std::uint64_t> degeneracies,
                                           const CountOptions& opts = {});

/// (n+g-1)! / (n! (g-1)!): n indistinguishable particles over g sub-states.
Count multiplicity_bose_exact(std::uint64_t n, std::uint64_t g, const CountOptions& opts = {});

/// n ln g - ln n!, the g >> n limit of the Bose count.
double multiplicity_bose_approx(std::uint64_t n, std::uint64_t g);

/// sum_{k=1..N} ln k, accumulated in extended precision.
double log_factorial_exact(std::uint64_t N);

/// N ln N - N. Throws DomainError for N == 0.
double log_factorial_stirling(std::uint64_t N);

/// N ln N - N + 1/2 ln(2 pi N). Throws DomainError for N == 0.
double log_factorial_stirling3(std::uint64_t N);

/// ln x! for real x >= 0 under the given form. All forms return 0 at x == 0.
double log_factorial(double x, StirlingForm form);

/// g^n: strings of n classical symbols drawn from a g-letter alphabet.
Count classical_symbol_states(std::uint64_t n, std::uint64_t g, const CountOptions& opts = {});

}  // namespace mixent::combinatorics

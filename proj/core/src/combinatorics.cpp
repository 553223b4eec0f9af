#include "mixent/combinatorics.hpp"

#include "mixent/errors.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace mixent::combinatorics {

namespace {

// Neumaier-compensated accumulator in extended precision.
class LogSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0.0L;
  long double comp_ = 0.0L;
};

// Beyond this, summing ln k one term at a time is replaced by lgamma.
constexpr std::uint64_t kSummationLimit = std::uint64_t{1} << 22;

void check_degeneracies(std::span<const std::uint64_t> degeneracies) {
  for (auto g : degeneracies)
    if (g == 0) throw DomainError("degeneracy must be a positive integer");
}

BigInt exact_binomial(std::uint64_t N, std::uint64_t n) {
  const std::uint64_t m = std::min(n, N - n);
  BigInt result = 1;
  for (std::uint64_t k = 1; k <= m; ++k) {
    result *= N - m + k;
    result /= k;  // exact: result is C(N-m+k, k) after this step
  }
  return result;
}

double log_binomial_summed(std::uint64_t N, std::uint64_t n) {
  const std::uint64_t m = std::min(n, N - n);
  LogSum s;
  for (std::uint64_t k = 1; k <= m; ++k)
    s.add(std::log(static_cast<long double>(N - m + k) / static_cast<long double>(k)));
  return static_cast<double>(s.value());
}

}  // namespace

OccupationVector::OccupationVector(std::vector<std::uint64_t> counts)
    : counts_(std::move(counts)),
      total_(std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0})) {}

OccupationVector::OccupationVector(std::vector<std::uint64_t> counts, std::uint64_t total)
    : OccupationVector(std::move(counts)) {
  if (total_ != total)
    throw DomainError("occupation counts sum to " + std::to_string(total_) +
                      ", declared total is " + std::to_string(total));
}

Count binomial(std::uint64_t N, std::uint64_t n, const CountOptions& opts) {
  if (n > N)
    throw DomainError("binomial: cannot place " + std::to_string(n) + " of " +
                      std::to_string(N) + " particles in a partition");
  if (opts.exact_for(N)) return Count(exact_binomial(N, n));
  return Count::log_only(log_binomial_summed(N, n));
}

Count multiplicity_distinguishable(const OccupationVector& occ,
                                   std::span<const std::uint64_t> degeneracies,
                                   const CountOptions& opts) {
  if (degeneracies.size() != occ.size())
    throw DomainError("multiplicity: " + std::to_string(occ.size()) + " occupations but " +
                      std::to_string(degeneracies.size()) + " degeneracies");
  check_degeneracies(degeneracies);

  if (opts.exact_for(occ.total())) {
    // Multinomial as a product of binomials over running totals.
    BigInt result = 1;
    std::uint64_t running = 0;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      running += occ[i];
      result *= exact_binomial(running, occ[i]);
      result *= boost::multiprecision::pow(BigInt(degeneracies[i]), static_cast<unsigned>(occ[i]));
    }
    return Count(std::move(result));
  }

  LogSum s;
  s.add(log_factorial_exact(occ.total()));
  for (std::size_t i = 0; i < occ.size(); ++i) {
    s.add(-static_cast<long double>(log_factorial_exact(occ[i])));
    s.add(static_cast<long double>(occ[i]) * std::log(static_cast<long double>(degeneracies[i])));
  }
  return Count::log_only(static_cast<double>(s.value()));
}

RationalCount multiplicity_gibbs_corrected(const OccupationVector& occ,
                                           std::span<const std::uint64_t> degeneracies,
                                           const CountOptions& opts) {
  const Count distinguishable = multiplicity_distinguishable(occ, degeneracies, opts);
  RationalCount out;
  out.log_value = distinguishable.log_value() - log_factorial_exact(occ.total());
  if (distinguishable.value()) {
    BigInt n_factorial = 1;
    for (std::uint64_t k = 2; k <= occ.total(); ++k) n_factorial *= k;
    out.exact = BigRational(*distinguishable.value(), n_factorial);
  }
  return out;
}

Count multiplicity_bose_exact(std::uint64_t n, std::uint64_t g, const CountOptions& opts) {
  if (g == 0) throw DomainError("bose count: degeneracy must be positive");
  return binomial(n + g - 1, n, opts);
}

double multiplicity_bose_approx(std::uint64_t n, std::uint64_t g) {
  if (g == 0) throw DomainError("bose count: degeneracy must be positive");
  if (n == 0) return 0.0;
  return static_cast<double>(n) * std::log(static_cast<double>(g)) - log_factorial_exact(n);
}

double log_factorial_exact(std::uint64_t N) {
  if (N < 2) return 0.0;
  if (N > kSummationLimit) return std::lgamma(static_cast<double>(N) + 1.0);
  LogSum s;
  for (std::uint64_t k = 2; k <= N; ++k) s.add(std::log(static_cast<long double>(k)));
  return static_cast<double>(s.value());
}

double log_factorial_stirling(std::uint64_t N) {
  if (N == 0) throw DomainError("Stirling form undefined at N = 0");
  const double x = static_cast<double>(N);
  return x * std::log(x) - x;
}

double log_factorial_stirling3(std::uint64_t N) {
  return log_factorial_stirling(N) +
         0.5 * std::log(2.0 * std::numbers::pi * static_cast<double>(N));
}

double log_factorial(double x, StirlingForm form) {
  if (!(x >= 0.0)) throw DomainError("log factorial of a negative or NaN argument");
  if (x == 0.0) return 0.0;
  switch (form) {
    case StirlingForm::TwoTerm:
      return x * std::log(x) - x;
    case StirlingForm::ThreeTerm:
      return x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x);
    case StirlingForm::Exact:
      return std::lgamma(x + 1.0);
  }
  return 0.0;
}

Count classical_symbol_states(std::uint64_t n, std::uint64_t g, const CountOptions& opts) {
  if (g == 0) throw DomainError("symbol count: alphabet size must be positive");
  if (opts.exact_for(n))
    return Count(boost::multiprecision::pow(BigInt(g), static_cast<unsigned>(n)));
  return Count::log_only(static_cast<double>(n) * std::log(static_cast<double>(g)));
}

}  // namespace mixent::combinatorics

#include "mixent/statmech.hpp"

#include "mixent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mixent::statmech {

namespace {

void check_levels(std::span<const LevelSpec> levels, double temperature) {
  if (levels.empty()) throw DomainError("level list is empty");
  if (!(temperature > 0.0) || !std::isfinite(temperature))
    throw DomainError("temperature must be positive and finite");
  for (const auto& level : levels) {
    if (!std::isfinite(level.energy)) throw DomainError("level energy must be finite");
    if (level.degeneracy == 0) throw DomainError("level degeneracy must be >= 1");
  }
}

double lowest_energy(std::span<const LevelSpec> levels) {
  return std::min_element(levels.begin(), levels.end(),
                          [](const LevelSpec& a, const LevelSpec& b) { return a.energy < b.energy; })
      ->energy;
}

// Boltzmann weights relative to the ground level, and their sum.
std::vector<double> shifted_weights(std::span<const LevelSpec> levels, double temperature,
                                    double& sum) {
  const double e0 = lowest_energy(levels);
  std::vector<double> w;
  w.reserve(levels.size());
  sum = 0.0;
  for (const auto& level : levels) {
    w.push_back(static_cast<double>(level.degeneracy) *
                std::exp(-(level.energy - e0) / temperature));
    sum += w.back();
  }
  return w;
}

}  // namespace

EnsembleSpec::EnsembleSpec(std::vector<LevelSpec> levels, std::uint64_t particles,
                           double temperature)
    : levels_(std::move(levels)), particles_(particles), temperature_(temperature) {
  check_levels(levels_, temperature_);
  if (particles_ == 0) throw DomainError("ensemble needs at least one particle");
}

std::string_view to_string(CountingModel model) {
  switch (model) {
    case CountingModel::Distinguishable: return "distinguishable";
    case CountingModel::GibbsCorrected: return "gibbs-corrected";
    case CountingModel::BoseApproximate: return "bose-approximate";
  }
  return "?";
}

std::string_view to_string(StirlingForm form) {
  switch (form) {
    case StirlingForm::TwoTerm: return "two-term";
    case StirlingForm::ThreeTerm: return "three-term";
    case StirlingForm::Exact: return "exact";
  }
  return "?";
}

CountingModel parse_counting_model(std::string_view name) {
  for (auto m : {CountingModel::Distinguishable, CountingModel::GibbsCorrected,
                 CountingModel::BoseApproximate})
    if (name == to_string(m)) return m;
  throw DomainError("unknown counting model '" + std::string(name) +
                    "' (expected distinguishable, gibbs-corrected or bose-approximate)");
}

StirlingForm parse_stirling_form(std::string_view name) {
  for (auto f : {StirlingForm::TwoTerm, StirlingForm::ThreeTerm, StirlingForm::Exact})
    if (name == to_string(f)) return f;
  throw DomainError("unknown Stirling form '" + std::string(name) +
                    "' (expected two-term, three-term or exact)");
}

double log_partition_function(std::span<const LevelSpec> levels, double temperature) {
  check_levels(levels, temperature);
  double sum = 0.0;
  shifted_weights(levels, temperature, sum);
  return -lowest_energy(levels) / temperature + std::log(sum);
}

double partition_function(std::span<const LevelSpec> levels, double temperature) {
  check_levels(levels, temperature);
  double sum = 0.0;
  shifted_weights(levels, temperature, sum);
  return std::exp(-lowest_energy(levels) / temperature) * sum;
}

std::vector<double> occupations(const EnsembleSpec& ens) {
  double sum = 0.0;
  auto n = shifted_weights(ens.levels(), ens.temperature(), sum);
  const double N = static_cast<double>(ens.particles());
  for (auto& x : n) x = N * (x / sum);
  return n;
}

double internal_energy(const EnsembleSpec& ens) {
  const auto n = occupations(ens);
  double U = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) U += n[i] * ens.levels()[i].energy;
  return U;
}

EntropyResult entropy_from_levels(const EnsembleSpec& ens, CountingModel model, StirlingForm form) {
  using combinatorics::log_factorial;
  const auto n = occupations(ens);
  const double N = static_cast<double>(ens.particles());

  // sum over levels of ln(g^n / n!)
  double per_level = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] <= 0.0) continue;
    per_level += n[i] * std::log(static_cast<double>(ens.levels()[i].degeneracy)) -
                 log_factorial(n[i], form);
  }

  double S = 0.0;
  switch (model) {
    case CountingModel::Distinguishable:
      S = log_factorial(N, form) + per_level;
      break;
    case CountingModel::GibbsCorrected:
      S = (log_factorial(N, form) + per_level) - log_factorial(N, form);
      break;
    case CountingModel::BoseApproximate:
      S = per_level;
      break;
  }
  return EntropyResult::make(S, N, model, form);
}

double entropy_via_partition_function(const EnsembleSpec& ens) {
  const double N = static_cast<double>(ens.particles());
  return N * log_partition_function(ens.levels(), ens.temperature()) +
         internal_energy(ens) / ens.temperature();
}

double entropy_via_occupations(const EnsembleSpec& ens) {
  const auto n = occupations(ens);
  const double N = static_cast<double>(ens.particles());
  double S = N * std::log(N);
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] > 0.0) S += n[i] * std::log(static_cast<double>(ens.levels()[i].degeneracy) / n[i]);
  return S;
}

EntropyResult ideal_gas_entropy(double particles, double volume, double temperature,
                                CountingModel model, StirlingForm form, double constant) {
  if (!(particles > 0.0) || !(volume > 0.0) || !(temperature > 0.0) ||
      !std::isfinite(particles) || !std::isfinite(volume) || !std::isfinite(temperature))
    throw DomainError("ideal gas entropy needs positive finite N, V and T");

  const double N = particles;
  // Z proportional to V T^{3/2} per particle.
  const double thermal = 1.5 * N * std::log(temperature);
  double S = 0.0;
  if (model == CountingModel::Distinguishable) {
    S = N * std::log(volume) + thermal;
  } else if (form == StirlingForm::TwoTerm) {
    S = N * std::log(volume / N) + N + thermal;
  } else {
    S = N * std::log(volume) + thermal - combinatorics::log_factorial(N, form);
  }
  return EntropyResult::make(S + constant, N, model, form);
}

double gibbs_shannon_entropy(std::span<const double> p) {
  if (p.empty()) throw DomainError("empty probability vector");
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw DomainError("probabilities must be nonnegative");
    total += x;
  }
  if (std::fabs(total - 1.0) > 1e-9)
    throw DomainError("probabilities sum to " + std::to_string(total) + ", not 1");
  double S = 0.0;
  for (double x : p)
    if (x > 0.0) S -= x * std::log(x);
  return S;
}

double helmholtz_free_energy(const EnsembleSpec& ens, CountingModel model, StirlingForm form) {
  return internal_energy(ens) - ens.temperature() * entropy_from_levels(ens, model, form).S;
}

}  // namespace mixent::statmech

#pragma once

#include "mixent/combinatorics.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

// Units: k_B = 1 throughout. Energies and temperatures share one reduced
// scale and every entropy is in nats (units of k_B).
namespace mixent::statmech {

using combinatorics::StirlingForm;

enum class CountingModel {
  Distinguishable,  ///< N! prod g^n / prod n!
  GibbsCorrected,   ///< the above divided by N!
  BoseApproximate,  ///< prod g^n / n!, the g >> n limit of Bose counting
};

struct LevelSpec {
  double energy = 0.0;
  std::uint64_t degeneracy = 1;
};

/// A level set populated by N particles at temperature T. Construction
/// validates every invariant (T > 0, N >= 1, nonempty, finite energies,
/// degeneracy >= 1).
class EnsembleSpec {
 public:
  EnsembleSpec(std::vector<LevelSpec> levels, std::uint64_t particles, double temperature);

  std::span<const LevelSpec> levels() const noexcept { return levels_; }
  std::uint64_t particles() const noexcept { return particles_; }
  double temperature() const noexcept { return temperature_; }

 private:
  std::vector<LevelSpec> levels_;
  std::uint64_t particles_;
  double temperature_;
};

struct EntropyResult {
  double S = 0.0;
  double per_particle = 0.0;
  CountingModel model = CountingModel::GibbsCorrected;
  StirlingForm stirling_form = StirlingForm::TwoTerm;

  static EntropyResult make(double S, double particles, CountingModel model, StirlingForm form) {
    return {S, S / particles, model, form};
  }
};

std::string_view to_string(CountingModel model);
std::string_view to_string(StirlingForm form);
/// Throws DomainError on an unknown name.
CountingModel parse_counting_model(std::string_view name);
StirlingForm parse_stirling_form(std::string_view name);

/// Z = sum g_i exp(-e_i / T), evaluated with the lowest level shifted to zero.
/// May overflow or underflow at extreme T; log_partition_function does not.
double partition_function(std::span<const LevelSpec> levels, double temperature);
double log_partition_function(std::span<const LevelSpec> levels, double temperature);

/// Mean occupations n_i = N g_i exp(-e_i / T) / Z.
std::vector<double> occupations(const EnsembleSpec& ens);

/// U = sum n_i e_i.
double internal_energy(const EnsembleSpec& ens);

/// ln W for the mean occupations under the chosen counting model and
/// factorial form. Levels with n_i == 0 contribute nothing.
EntropyResult entropy_from_levels(const EnsembleSpec& ens, CountingModel model,
                                  StirlingForm form = StirlingForm::TwoTerm);

/// N ln Z + U/T. Equal to the Distinguishable two-term entropy_from_levels.
double entropy_via_partition_function(const EnsembleSpec& ens);

/// N ln N + sum n_i ln(g_i / n_i), the counting side of the same identity.
double entropy_via_occupations(const EnsembleSpec& ens);

/// Ideal-gas entropy up to an additive constant.
///
///   Distinguishable:  N ln V + (3/2) N ln T + C
///   GibbsCorrected:   N ln V + (3/2) N ln T - ln N! + C
///
/// With the two-term form the corrected branch is evaluated as
/// N ln(V/N) + N + (3/2) N ln T + C so that equal-density splits cancel
/// bit for bit. BoseApproximate counts prod g^n / n! directly and agrees
/// with GibbsCorrected. Particle number is real so that non-integer
/// sub-volumes can be evaluated under the Stirling forms.
EntropyResult ideal_gas_entropy(double particles, double volume, double temperature,
                                CountingModel model,
                                StirlingForm form = StirlingForm::TwoTerm,
                                double constant = 0.0);

/// -sum p_i ln p_i with 0 ln 0 = 0. Requires p_i >= 0 and |sum p - 1| <= 1e-9.
double gibbs_shannon_entropy(std::span<const double> p);

/// F = U - T S with S from entropy_from_levels.
double helmholtz_free_energy(const EnsembleSpec& ens, CountingModel model,
                             StirlingForm form = StirlingForm::TwoTerm);

}  // namespace mixent::statmech

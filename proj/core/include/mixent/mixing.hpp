#pragma once

#include "mixent/statmech.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mixent::mixing {

using statmech::CountingModel;
using statmech::EntropyResult;
using statmech::StirlingForm;

/// How a pair overlap q = |<a|b>| scales the inter-species part of the
/// mixing entropy. Complement uses 1 - q^2 (full at q = 0, none at q = 1);
/// Literal uses q^2.
enum class Weighting { Complement, Literal };

/// Removal joins the compartments into final_volume; Insertion is the
/// reverse process, starting from the joined gas.
enum class Process { Removal, Insertion };

struct GasCompartment {
  std::string species;
  std::uint64_t N = 0;
  double V = 0.0;
  double T = 0.0;
};

/// Magnitude of the state overlap between two species. The pair is unordered.
struct SpeciesOverlap {
  std::string a;
  std::string b;
  double overlap = 0.0;

  bool matches(std::string_view x, std::string_view y) const {
    return (a == x && b == y) || (a == y && b == x);
  }
};

struct MixingScenario {
  std::string id = "scenario";
  std::vector<GasCompartment> initial;
  double final_volume = 0.0;
  std::vector<SpeciesOverlap> overlaps;
  CountingModel model = CountingModel::GibbsCorrected;
  StirlingForm stirling_form = StirlingForm::TwoTerm;
  Weighting weighting = Weighting::Complement;
  Process process = Process::Removal;

  /// Throws DomainError if any invariant fails: nonempty, N >= 1, V > 0,
  /// shared T > 0, final volume equal to the summed volumes (1e-12 rel.),
  /// overlaps in [0, 1].
  void validate() const;

  /// The common temperature. Requires a valid scenario.
  double temperature() const { return initial.front().T; }
};

struct MixingReport {
  /// For Removal: the partitioned state. For Insertion: the joined state.
  EntropyResult S_initial;
  /// Effective entropy of the end state. For a joined state this is
  /// S_merged + w (S_distinct - S_merged), so delta_S == S_final - S_initial.
  EntropyResult S_final;
  double delta_S = 0.0;
  /// delta_S if every species pair were fully distinguishable (overlap 0).
  double delta_S_distinct = 0.0;
  /// delta_S if every species were the same (overlap 1).
  double delta_S_identical = 0.0;
  double separation_work = 0.0;
  /// Single overlap q whose weight w(q) reproduces the applied weight.
  double overlap_applied = 0.0;
  double weight_applied = 0.0;
  Weighting weighting = Weighting::Complement;
  /// Species pairs that had no overlap entry and defaulted to 0.
  std::vector<std::pair<std::string, std::string>> defaulted_pairs;
  /// Partial overlap outside the two-equal-species case: the weighting is
  /// extended linearly there.
  bool extended_weighting = false;
};

std::string_view to_string(Weighting w);
std::string_view to_string(Process p);
Weighting parse_weighting(std::string_view name);
Process parse_process(std::string_view name);

/// Weight factor w(q) for the given mode. Throws DomainError outside [0, 1].
double overlap_weight(double overlap, Weighting weighting);

/// delta_S_full * w(overlap).
double overlap_weighted_mixing_entropy(double delta_S_full, double overlap, Weighting weighting);

/// Minimum isothermal work T * delta_S to undo a mixing (k_B = 1).
double separation_work(double delta_S, double T);

/// Entropy change of the scenario's process.
MixingReport mixing_entropy(const MixingScenario& s);

/// Insert `parts` - 1 walls into a single-species gas, giving equal
/// compartments. When parts divides N this goes through mixing_entropy with
/// Process::Insertion. Otherwise only the Stirling forms are accepted and
/// the sub-volume particle number is taken as the real N / parts.
MixingReport partition_change_entropy(std::uint64_t N, double V, double T, std::uint64_t parts,
                                      CountingModel model,
                                      StirlingForm form = StirlingForm::TwoTerm);

/// Two half-volumes of one atomic species, spin-up and spin-down. Without a
/// field the two spin projections have overlap 1; with a field, overlap 0.
MixingScenario spin_field_scenario(std::uint64_t N, double V, double T, bool field_on);

}  // namespace mixent::mixing

#include "mixent/mixing.hpp"

#include "mixent/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mixent::mixing {

namespace {

struct SpeciesTotal {
  std::string name;
  std::uint64_t N = 0;
};

std::vector<SpeciesTotal> species_totals(const std::vector<GasCompartment>& compartments) {
  std::vector<SpeciesTotal> out;
  for (const auto& c : compartments) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const SpeciesTotal& s) { return s.name == c.species; });
    if (it == out.end())
      out.push_back({c.species, c.N});
    else
      it->N += c.N;
  }
  return out;
}

const SpeciesOverlap* find_overlap(const std::vector<SpeciesOverlap>& overlaps,
                                   std::string_view a, std::string_view b) {
  for (const auto& o : overlaps)
    if (o.matches(a, b)) return &o;
  return nullptr;
}

double inverse_weight(double w, Weighting weighting) {
  // w(q) is monotone on [0, 1] in both modes, so q is recoverable.
  const double q2 = weighting == Weighting::Complement ? 1.0 - w : w;
  return std::sqrt(std::clamp(q2, 0.0, 1.0));
}

}  // namespace

void MixingScenario::validate() const {
  if (initial.empty()) throw DomainError("scenario has no compartments");
  const double T = initial.front().T;
  double total_volume = 0.0;
  for (const auto& c : initial) {
    if (c.species.empty()) throw DomainError("compartment species label is empty");
    if (c.N == 0) throw DomainError("compartment '" + c.species + "' has no particles");
    if (!(c.V > 0.0) || !std::isfinite(c.V))
      throw DomainError("compartment '" + c.species + "' needs a positive finite volume");
    if (!(c.T > 0.0) || !std::isfinite(c.T))
      throw DomainError("compartment '" + c.species + "' needs a positive finite temperature");
    if (std::fabs(c.T - T) > 1e-12 * T)
      throw DomainError("compartments have different temperatures; only isothermal mixing is supported");
    total_volume += c.V;
  }
  if (!(final_volume > 0.0)) throw DomainError("final volume must be positive");
  if (std::fabs(final_volume - total_volume) > 1e-12 * total_volume)
    throw DomainError("final volume " + std::to_string(final_volume) +
                      " differs from the summed compartment volumes " +
                      std::to_string(total_volume));
  for (const auto& o : overlaps) {
    if (!(o.overlap >= 0.0 && o.overlap <= 1.0))
      throw DomainError("overlap for pair (" + o.a + ", " + o.b + ") is outside [0, 1]");
    if (o.a == o.b && o.overlap != 1.0)
      throw DomainError("a species always has overlap 1 with itself (" + o.a + ")");
  }
}

std::string_view to_string(Weighting w) {
  return w == Weighting::Complement ? "complement" : "literal";
}

std::string_view to_string(Process p) { return p == Process::Removal ? "removal" : "insertion"; }

Weighting parse_weighting(std::string_view name) {
  if (name == "complement") return Weighting::Complement;
  if (name == "literal") return Weighting::Literal;
  throw DomainError("unknown weighting '" + std::string(name) + "' (expected complement or literal)");
}

Process parse_process(std::string_view name) {
  if (name == "removal") return Process::Removal;
  if (name == "insertion") return Process::Insertion;
  throw DomainError("unknown process '" + std::string(name) + "' (expected removal or insertion)");
}

double overlap_weight(double overlap, Weighting weighting) {
  if (!(overlap >= 0.0 && overlap <= 1.0)) throw DomainError("overlap must lie in [0, 1]");
  const double q2 = overlap * overlap;
  return weighting == Weighting::Complement ? 1.0 - q2 : q2;
}

double overlap_weighted_mixing_entropy(double delta_S_full, double overlap, Weighting weighting) {
  return delta_S_full * overlap_weight(overlap, weighting);
}

double separation_work(double delta_S, double T) {
  if (!(T > 0.0)) throw DomainError("temperature must be positive");
  return T * delta_S;
}

MixingReport mixing_entropy(const MixingScenario& s) {
  s.validate();
  const double T = s.temperature();
  const auto gas = [&](double N, double V) {
    return statmech::ideal_gas_entropy(N, V, T, s.model, s.stirling_form).S;
  };

  double S_partitioned = 0.0;
  std::uint64_t N_total = 0;
  for (const auto& c : s.initial) {
    S_partitioned += gas(static_cast<double>(c.N), c.V);
    N_total += c.N;
  }

  const auto species = species_totals(s.initial);
  const double S_merged = gas(static_cast<double>(N_total), s.final_volume);
  double S_distinct = S_merged;
  if (s.model != CountingModel::Distinguishable && species.size() > 1) {
    S_distinct = 0.0;
    for (const auto& sp : species) S_distinct += gas(static_cast<double>(sp.N), s.final_volume);
  }

  MixingReport r;
  r.weighting = s.weighting;

  // Pair weights averaged over inter-species particle pairs N_a N_b.
  double pair_mass = 0.0;
  double weighted = 0.0;
  bool partial = false;
  for (std::size_t i = 0; i < species.size(); ++i) {
    for (std::size_t j = i + 1; j < species.size(); ++j) {
      double q = 0.0;
      if (const auto* o = find_overlap(s.overlaps, species[i].name, species[j].name))
        q = o->overlap;
      else
        r.defaulted_pairs.emplace_back(species[i].name, species[j].name);
      if (q > 0.0 && q < 1.0) partial = true;
      const double mass = static_cast<double>(species[i].N) * static_cast<double>(species[j].N);
      pair_mass += mass;
      weighted += mass * overlap_weight(q, s.weighting);
    }
  }
  if (pair_mass > 0.0) {
    r.weight_applied = weighted / pair_mass;
    r.overlap_applied = inverse_weight(r.weight_applied, s.weighting);
  } else {
    r.overlap_applied = 1.0;
    r.weight_applied = overlap_weight(1.0, s.weighting);
  }
  r.extended_weighting =
      partial && !(species.size() == 2 && species[0].N == species[1].N);

  const double S_joined = S_merged + r.weight_applied * (S_distinct - S_merged);
  const double N = static_cast<double>(N_total);
  if (s.process == Process::Removal) {
    r.S_initial = EntropyResult::make(S_partitioned, N, s.model, s.stirling_form);
    r.S_final = EntropyResult::make(S_joined, N, s.model, s.stirling_form);
    r.delta_S_distinct = S_distinct - S_partitioned;
    r.delta_S_identical = S_merged - S_partitioned;
  } else {
    r.S_initial = EntropyResult::make(S_joined, N, s.model, s.stirling_form);
    r.S_final = EntropyResult::make(S_partitioned, N, s.model, s.stirling_form);
    r.delta_S_distinct = S_partitioned - S_distinct;
    r.delta_S_identical = S_partitioned - S_merged;
  }
  r.delta_S = r.S_final.S - r.S_initial.S;
  r.separation_work = separation_work(r.delta_S, T);
  return r;
}

MixingReport partition_change_entropy(std::uint64_t N, double V, double T, std::uint64_t parts,
                                      CountingModel model, StirlingForm form) {
  if (parts < 2) throw DomainError("a partition needs at least 2 parts");
  if (parts > N)
    throw DomainError("cannot split " + std::to_string(N) + " particles into " +
                      std::to_string(parts) + " nonempty parts");

  if (N % parts == 0) {
    MixingScenario s;
    s.id = "partition-" + std::to_string(parts);
    const double v = V / static_cast<double>(parts);
    for (std::uint64_t k = 0; k < parts; ++k) s.initial.push_back({"gas", N / parts, v, T});
    s.final_volume = V;
    s.model = model;
    s.stirling_form = form;
    s.process = Process::Insertion;
    return mixing_entropy(s);
  }

  if (form == StirlingForm::Exact)
    throw DomainError(std::to_string(parts) + " does not divide " + std::to_string(N) +
                      "; exact factorials need integer compartment populations");

  const double n = static_cast<double>(N) / static_cast<double>(parts);
  const double v = V / static_cast<double>(parts);
  const double S_whole = statmech::ideal_gas_entropy(static_cast<double>(N), V, T, model, form).S;
  const double S_parts =
      static_cast<double>(parts) * statmech::ideal_gas_entropy(n, v, T, model, form).S;

  MixingReport r;
  const double Nd = static_cast<double>(N);
  r.S_initial = EntropyResult::make(S_whole, Nd, model, form);
  r.S_final = EntropyResult::make(S_parts, Nd, model, form);
  r.delta_S = S_parts - S_whole;
  r.delta_S_distinct = r.delta_S;
  r.delta_S_identical = r.delta_S;
  r.overlap_applied = 1.0;
  r.weight_applied = overlap_weight(1.0, r.weighting);
  r.separation_work = separation_work(r.delta_S, T);
  return r;
}

MixingScenario spin_field_scenario(std::uint64_t N, double V, double T, bool field_on) {
  if (N == 0 || N % 2 != 0) throw DomainError("spin scenario needs a positive even N");
  MixingScenario s;
  s.id = field_on ? "spin-field-on" : "spin-field-off";
  s.initial = {{"spin-up", N / 2, V / 2.0, T}, {"spin-down", N / 2, V / 2.0, T}};
  s.final_volume = V;
  s.overlaps = {{"spin-up", "spin-down", field_on ? 0.0 : 1.0}};
  return s;
}

}  // namespace mixent::mixing

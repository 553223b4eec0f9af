#pragma once

#include "mixent/mixing.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mixent::io {

inline constexpr double kBoltzmannSI = 1.380649e-23;  // J/K, exact since 2019

enum class UnitSystem { Reduced, SI };

/// Reads MIXENT_KB (reduced | si, default reduced). Throws DomainError on
/// any other value.
UnitSystem units_from_environment();

std::string_view entropy_unit(UnitSystem u);
std::string_view energy_unit(UnitSystem u);

struct OutputRecord {
  std::string scenario_id;
  std::string model;
  std::string stirling_form;
  std::string weighting;
  double overlap = 0.0;
  double S_initial = 0.0;
  double S_final = 0.0;
  double delta_S = 0.0;
  double separation_work = 0.0;
  std::string entropy_unit;
  std::string work_unit;
};

OutputRecord make_record(const mixing::MixingScenario& s, const mixing::MixingReport& r,
                         UnitSystem units = UnitSystem::Reduced);

/// 12 significant digits, negative zero printed as 0.
std::string format_number(double x);

/// Header row plus one line per record.
std::string to_csv(const std::vector<OutputRecord>& records);

/// A JSON array with one object per record, keys named as in OutputRecord.
std::string to_json(const std::vector<OutputRecord>& records);

}  // namespace mixent::io

#include "mixent/records.hpp"

#include "mixent/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace mixent::io {

UnitSystem units_from_environment() {
  const char* v = std::getenv("MIXENT_KB");
  if (v == nullptr || std::string_view(v).empty() || std::string_view(v) == "reduced")
    return UnitSystem::Reduced;
  if (std::string_view(v) == "si") return UnitSystem::SI;
  throw DomainError("MIXENT_KB must be 'reduced' or 'si', got '" + std::string(v) + "'");
}

std::string_view entropy_unit(UnitSystem u) { return u == UnitSystem::SI ? "J/K" : "k_B"; }
std::string_view energy_unit(UnitSystem u) { return u == UnitSystem::SI ? "J" : "k_B*T"; }

OutputRecord make_record(const mixing::MixingScenario& s, const mixing::MixingReport& r,
                         UnitSystem units) {
  const double k = units == UnitSystem::SI ? kBoltzmannSI : 1.0;
  OutputRecord rec;
  rec.scenario_id = s.id;
  rec.model = statmech::to_string(s.model);
  rec.stirling_form = statmech::to_string(s.stirling_form);
  rec.weighting = mixing::to_string(s.weighting);
  rec.overlap = r.overlap_applied;
  rec.S_initial = k * r.S_initial.S;
  rec.S_final = k * r.S_final.S;
  rec.delta_S = k * r.delta_S;
  rec.separation_work = k * r.separation_work;
  rec.entropy_unit = entropy_unit(units);
  rec.work_unit = energy_unit(units);
  return rec;
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::ostringstream os;
  os << "scenario_id,model,stirling_form,weighting,overlap,S_initial,S_final,delta_S,"
        "separation_work,entropy_unit,work_unit\n";
  for (const auto& r : records) {
    os << csv_field(r.scenario_id) << ',' << r.model << ',' << r.stirling_form << ','
       << r.weighting << ',' << format_number(r.overlap) << ',' << format_number(r.S_initial)
       << ',' << format_number(r.S_final) << ',' << format_number(r.delta_S) << ','
       << format_number(r.separation_work) << ',' << r.entropy_unit << ',' << r.work_unit
       << '\n';
  }
  return os.str();
}

std::string to_json(const std::vector<OutputRecord>& records) {
  // Strings go through the JSON library for escaping; numbers keep the
  // 12-digit text so both formats carry identical values.
  const auto str = [](const std::string& v) { return nlohmann::json(v).dump(); };
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << (i ? ",\n" : "\n") << "  {"
       << "\"scenario_id\": " << str(r.scenario_id) << ", "
       << "\"model\": " << str(r.model) << ", "
       << "\"stirling_form\": " << str(r.stirling_form) << ", "
       << "\"weighting\": " << str(r.weighting) << ", "
       << "\"overlap\": " << format_number(r.overlap) << ", "
       << "\"S_initial\": " << format_number(r.S_initial) << ", "
       << "\"S_final\": " << format_number(r.S_final) << ", "
       << "\"delta_S\": " << format_number(r.delta_S) << ", "
       << "\"separation_work\": " << format_number(r.separation_work) << ", "
       << "\"entropy_unit\": " << str(r.entropy_unit) << ", "
       << "\"work_unit\": " << str(r.work_unit) << "}";
  }
  os << (records.empty() ? "]\n" : "\n]\n");
  return os.str();
}

}  // namespace mixent::io

#include "mixent/scenario_io.hpp"

#include "mixent/errors.hpp"

#include <yaml-cpp/yaml.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

namespace mixent::io {

using mixing::GasCompartment;
using mixing::MixingScenario;
using mixing::SpeciesOverlap;

namespace {

[[noreturn]] void fail(const YAML::Node& node, const std::string& what) {
  const auto mark = node.Mark();
  if (mark.is_null()) throw ParseError(what, 0, 0);
  throw ParseError(what, mark.line + 1, mark.column + 1);
}

void expect_map(const YAML::Node& node, const std::string& what,
                std::initializer_list<std::string_view> allowed) {
  if (!node.IsMap()) fail(node, what + " must be a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(kv.first, "unknown key '" + key + "' in " + what);
  }
}

YAML::Node required(const YAML::Node& map, const char* key, const std::string& what) {
  const YAML::Node v = map[key];
  if (!v) fail(map, what + " is missing required key '" + key + "'");
  return v;
}

std::string scalar(const YAML::Node& node, const std::string& what) {
  if (!node.IsScalar()) fail(node, what + " must be a scalar");
  return node.Scalar();
}

double real(const YAML::Node& node, const std::string& what) {
  const auto text = scalar(node, what);
  double x = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, x);
  if (ec != std::errc() || ptr != end || !std::isfinite(x))
    fail(node, what + " must be a finite number, got '" + text + "'");
  return x;
}

std::uint64_t count(const YAML::Node& node, const std::string& what) {
  const auto text = scalar(node, what);
  std::uint64_t n = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, n);
  if (ec != std::errc() || ptr != end)
    fail(node, what + " must be a nonnegative integer, got '" + text + "'");
  return n;
}

template <class Parse>
auto enum_value(const YAML::Node& node, const std::string& what, Parse parse) {
  const auto text = scalar(node, what);
  try {
    return parse(text);
  } catch (const DomainError& e) {
    fail(node, e.what());
  }
}

GasCompartment parse_compartment(const YAML::Node& node) {
  expect_map(node, "compartment", {"species", "N", "V", "T"});
  GasCompartment c;
  c.species = scalar(required(node, "species", "compartment"), "species");
  c.N = count(required(node, "N", "compartment"), "N");
  c.V = real(required(node, "V", "compartment"), "V");
  c.T = real(required(node, "T", "compartment"), "T");
  return c;
}

SpeciesOverlap parse_overlap(const YAML::Node& node) {
  expect_map(node, "overlap entry", {"pair", "overlap"});
  const YAML::Node pair = required(node, "pair", "overlap entry");
  if (!pair.IsSequence() || pair.size() != 2)
    fail(pair, "pair must be a list of two species labels");
  SpeciesOverlap o;
  o.a = scalar(pair[0], "species label");
  o.b = scalar(pair[1], "species label");
  o.overlap = real(required(node, "overlap", "overlap entry"), "overlap");
  return o;
}

std::string exact_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

MixingScenario parse_scenario(std::string_view text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root || root.IsNull()) throw ParseError("scenario document is empty", 0, 0);
  expect_map(root, "scenario",
             {"id", "model", "stirling_form", "weighting", "process", "final_volume",
              "compartments", "overlaps"});

  MixingScenario s;
  if (root["id"]) s.id = scalar(root["id"], "id");
  if (root["model"])
    s.model = enum_value(root["model"], "model", statmech::parse_counting_model);
  if (root["stirling_form"])
    s.stirling_form = enum_value(root["stirling_form"], "stirling_form", statmech::parse_stirling_form);
  if (root["weighting"])
    s.weighting = enum_value(root["weighting"], "weighting", mixing::parse_weighting);
  if (root["process"]) s.process = enum_value(root["process"], "process", mixing::parse_process);

  const YAML::Node compartments = required(root, "compartments", "scenario");
  if (!compartments.IsSequence() || compartments.size() == 0)
    fail(compartments, "compartments must be a nonempty list");
  for (const auto& c : compartments) s.initial.push_back(parse_compartment(c));

  if (const YAML::Node overlaps = root["overlaps"]) {
    if (!overlaps.IsSequence()) fail(overlaps, "overlaps must be a list");
    for (const auto& o : overlaps) s.overlaps.push_back(parse_overlap(o));
  }

  if (root["final_volume"]) {
    s.final_volume = real(root["final_volume"], "final_volume");
  } else {
    s.final_volume = 0.0;
    for (const auto& c : s.initial) s.final_volume += c.V;
  }

  s.validate();
  return s;
}

MixingScenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path.string() + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  auto s = parse_scenario(buf.str());
  const auto doc = YAML::Load(buf.str());
  if (!doc["id"]) s.id = path.stem().string();
  return s;
}

std::string write_scenario(const MixingScenario& s) {
  YAML::Emitter out;
  out << YAML::Comment("N: particles, V: volume (any consistent unit), T: reduced temperature");
  out << YAML::BeginMap;
  out << YAML::Key << "id" << YAML::Value << s.id;
  out << YAML::Key << "model" << YAML::Value << std::string(statmech::to_string(s.model));
  out << YAML::Key << "stirling_form" << YAML::Value
      << std::string(statmech::to_string(s.stirling_form));
  out << YAML::Key << "weighting" << YAML::Value << std::string(mixing::to_string(s.weighting));
  out << YAML::Key << "process" << YAML::Value << std::string(mixing::to_string(s.process));
  out << YAML::Key << "final_volume" << YAML::Value << exact_number(s.final_volume);
  out << YAML::Key << "compartments" << YAML::Value << YAML::BeginSeq;
  for (const auto& c : s.initial) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "species" << YAML::Value << c.species;
    out << YAML::Key << "N" << YAML::Value << c.N;
    out << YAML::Key << "V" << YAML::Value << exact_number(c.V);
    out << YAML::Key << "T" << YAML::Value << exact_number(c.T);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::Key << "overlaps" << YAML::Value << YAML::BeginSeq;
  for (const auto& o : s.overlaps) {
    out << YAML::Flow << YAML::BeginMap;
    out << YAML::Key << "pair" << YAML::Value << YAML::Flow << YAML::BeginSeq << o.a << o.b
        << YAML::EndSeq;
    out << YAML::Key << "overlap" << YAML::Value << exact_number(o.overlap);
    out << YAML::EndMap;
  }
  out << YAML::EndSeq;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace mixent::io

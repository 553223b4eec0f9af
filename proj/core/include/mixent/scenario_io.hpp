#pragma once

#include "mixent/mixing.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace mixent::io {

/// Parse a YAML scenario document.
///
///   # N: particles, V: volume (any consistent unit), T: reduced temperature
///   id: distinct-halves
///   model: gibbs-corrected        # distinguishable | gibbs-corrected | bose-approximate
///   stirling_form: two-term       # two-term | three-term | exact
///   weighting: complement         # complement | literal
///   process: removal              # removal | insertion
///   final_volume: 2.0             # optional; defaults to the summed volumes
///   compartments:
///     - {species: A, N: 500, V: 1.0, T: 1.0}
///     - {species: B, N: 500, V: 1.0, T: 1.0}
///   overlaps:
///     - {pair: [A, B], overlap: 0.0}
///
/// Syntax errors, unknown keys, missing keys and bad enum names raise
/// ParseError with a 1-based line and column. A well-formed document that
/// violates a scenario invariant raises DomainError.
mixing::MixingScenario parse_scenario(std::string_view text);

/// Reads and parses a file. The id defaults to the file stem.
mixing::MixingScenario load_scenario(const std::filesystem::path& path);

/// Serialize every declared field; parse_scenario(write_scenario(s))
/// reproduces s exactly.
std::string write_scenario(const mixing::MixingScenario& s);

}  // namespace mixent::io

#pragma once

#include <string>
#include <string_view>

#include "triadic/enumerator.hpp"

namespace triadic::cli {

/// {meta: {dispersion, domain, generator_version, count, dispersion_spec},
///  triads: [[n1,m1,n2,m2,n3,m3], ...]} with one triad per line.
std::string solution_json(const SolutionSet& set);

/// "# dispersion=<name> domain=<D>" comment, header row, one triad per row.
std::string solution_csv(const SolutionSet& set);

/// Parses either format (detected from the first non-blank character).
/// Triads are canonicalised and sorted; each is re-checked against the
/// dispersion law. Throws ParseError with the offending line and column.
/// `fallback` supplies the dispersion for CSV files without a comment header
/// and for blank input, which reads as an empty set.
SolutionSet read_solution(std::string_view text, const DispersionSpec* fallback = nullptr);

/// Resolves "sphere", "channel" or a dispersion spec JSON document name.
DispersionSpec preset_dispersion(std::string_view name);

}  // namespace triadic::cli

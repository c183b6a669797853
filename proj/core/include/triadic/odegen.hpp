#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triadic/dispersion.hpp"

namespace triadic {

/// One interaction term prefactor * alpha_<alpha_id> * A_f0 * A_f1.
struct OdeTerm {
  std::size_t alpha_id = 0;  // 3 * (local triad) + slot, 1-based
  std::size_t triad = 0;     // local triad index within the system
  int slot = 0;              // 1, 2 or 3 (k1, k2, k3)
  std::array<std::size_t, 2> factors{};  // mode indices
  std::int64_t prefactor_num = 1;
  std::int64_t prefactor_den = 1;

  friend bool operator==(const OdeTerm&, const OdeTerm&) = default;
};

struct OdeEquation {
  std::size_t mode = 0;
  std::vector<OdeTerm> terms;

  friend bool operator==(const OdeEquation&, const OdeEquation&) = default;
};

/// Amplitude equations for one connected cluster of triads. A mode shared by
/// t triads appears once and each of its t terms carries the prefactor 1/t.
struct OdeSystem {
  std::vector<Triad> triads;
  std::vector<std::size_t> triad_ids;  // ids in the source solution set
  std::vector<WaveVector> modes;       // order of first appearance
  /// Display index of each mode: the first (triad, slot) position it holds,
  /// so an isolated triad has A1 A2 A3 and a butterfly joined through its
  /// third mode has A1 A2 A3 A5 A6.
  std::vector<std::size_t> mode_labels;
  std::vector<OdeEquation> equations;  // one per mode, same order as modes
  /// Local triad pairs that share two modes.
  std::vector<std::pair<std::size_t, std::size_t>> double_links;

  friend bool operator==(const OdeSystem&, const OdeSystem&) = default;
};

/// Builds the system for a component given in canonical triad order.
/// `triad_ids` defaults to 0..n-1.
OdeSystem generate(std::span<const Triad> component, std::span<const std::size_t> triad_ids = {});

enum class OdeFormat { text, structured };

/// "text" or "json"/"structured"; throws std::invalid_argument otherwise.
OdeFormat parse_ode_format(std::string_view name);

/// Optional numeric values for the symbolic coefficients, keyed by
/// (solution-set triad id, slot 1..3). Values are emitted verbatim.
using CoefficientTable = std::map<std::pair<std::size_t, int>, std::string>;

std::string emit(const OdeSystem& system, OdeFormat format,
                 const CoefficientTable* coefficients = nullptr);
std::string emit(const OdeSystem& system, std::string_view format,
                 const CoefficientTable* coefficients = nullptr);

/// Concatenation of emit() over several systems; empty input gives "".
std::string emit_all(std::span<const OdeSystem> systems, OdeFormat format,
                     const CoefficientTable* coefficients = nullptr);

}  // namespace triadic

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "triadic/polynomial.hpp"

namespace triadic {

/// Integer lattice mode (m, n): m is the zonal wavenumber, n the meridional
/// wavenumber (Legendre degree on the sphere).
struct WaveVector {
  std::int64_t m = 0;
  std::int64_t n = 0;

  friend auto operator<=>(const WaveVector&, const WaveVector&) = default;
};

/// One resonant triad k1 + k2 = k3 with omega(k1) + omega(k2) = omega(k3).
/// Canonical form has (n1, m1) <= (n2, m2) lexicographically.
struct Triad {
  WaveVector k1;
  WaveVector k2;
  WaveVector k3;

  std::array<WaveVector, 3> vectors() const { return {k1, k2, k3}; }

  auto sort_key() const { return std::tuple(k1.n, k2.n, k3.n, k1.m, k2.m, k3.m); }

  Triad canonical() const;

  friend bool operator==(const Triad&, const Triad&) = default;
  friend auto operator<=>(const Triad& a, const Triad& b) { return a.sort_key() <=> b.sort_key(); }
};

struct ConstraintFlags {
  bool m_le_n = true;
  bool distinct_n = true;
  bool triangle = false;
  bool odd_sum = false;

  friend bool operator==(const ConstraintFlags&, const ConstraintFlags&) = default;
};

/// beta(0..D) evaluated once; index 0 is unused.
using BetaTable = std::vector<std::int64_t>;

/// Rational dispersion law omega = m / beta(n) and its admissibility rules.
/// The physical constant in front of omega cancels from the resonance
/// condition and is not represented.
class DispersionSpec {
public:
  DispersionSpec(std::string name, Polynomial beta, ConstraintFlags flags);

  /// beta(n) = n(n+1); all four constraints on.
  static DispersionSpec sphere();
  /// beta(n) = n^2 + 1; m <= n and distinct n only.
  static DispersionSpec channel();

  /// Parses {"name", "beta": "<expr>" | [c0, c1, ...], "flags": {...}}.
  /// Throws SpecError.
  static DispersionSpec from_json(std::string_view text);
  std::string to_json() const;

  const std::string& name() const noexcept { return name_; }
  const Polynomial& beta() const noexcept { return beta_; }
  const ConstraintFlags& flags() const noexcept { return flags_; }

  /// beta(n); throws CapacityError if it does not fit in int64.
  std::int64_t beta_at(std::int64_t n) const;

  /// Evaluates beta on [0, domain] and checks it is positive and strictly
  /// increasing on [1, domain]. Throws SpecError or CapacityError.
  BetaTable table(std::int64_t domain) const;

  /// Upper bound on m for a mode of meridional index n inside domain D.
  std::int64_t m_limit(std::int64_t n, std::int64_t domain) const noexcept {
    return flags_.m_le_n ? n : domain;
  }

  friend bool operator==(const DispersionSpec&, const DispersionSpec&) = default;

private:
  std::string name_;
  Polynomial beta_;
  ConstraintFlags flags_;
};

/// True iff m1*b2*b3 + m2*b1*b3 == m3*b1*b2 exactly, with b_i = beta(n_i).
/// Throws CapacityError if the products exceed 127 bits.
bool omega_compare(const DispersionSpec& spec, const Triad& triple);

/// True iff m1 + m2 == m3 and every enabled constraint flag holds.
bool admissible(const DispersionSpec& spec, const Triad& triple);

}  // namespace triadic

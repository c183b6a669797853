#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "triadic/dispersion.hpp"

namespace triadic {

/// Every triad of a dispersion law inside the domain [1, D], in canonical
/// order (sorted by n1, n2, n3, m1) without duplicates.
struct SolutionSet {
  DispersionSpec spec;
  std::int64_t domain = 0;
  std::vector<Triad> triads;

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

/// All m-solutions of one n-triple: (m1, m2, m3) = k * (rd, rn, rn + rd) for
/// k = 1..kmax, with gcd(rn, rd) = 1.
struct MFamily {
  std::int64_t rn = 0;
  std::int64_t rd = 0;
  std::int64_t kmax = 0;

  friend bool operator==(const MFamily&, const MFamily&) = default;
};

/// Largest domain the fast path accepts; beyond it D^2 no longer fits the
/// 64-bit products formed after the overflow guard.
inline constexpr std::int64_t kMaxDomain = 2'000'000'000;

struct EnumerateOptions {
  unsigned jobs = 1;
};

/// Peak magnitude and work counters collected by enumerate_traced.
struct EnumerationTrace {
  std::int64_t peak = 0;
  std::uint64_t triples = 0;
  std::uint64_t guarded = 0;  // triples rejected by the pre-multiplication bound
  std::uint64_t families = 0;
};

/// Closed-form m-family for the n-triple (n1, n2, n3), n1 < n3 < n2.
/// Returns nullopt when the cross-reduced factors fail the bound check or
/// when kmax would be 0. `domain` caps m when the dispersion has no m <= n rule;
/// if omitted, max(n1, n2, n3) is used.
std::optional<MFamily> solve_n_triple(const DispersionSpec& spec, std::int64_t n1, std::int64_t n2,
                                      std::int64_t n3, std::optional<std::int64_t> domain = {});

/// Enumerates every triad in [1, D]. Throws CapacityError before doing any
/// work if D or beta(D) does not fit the fast-path integer width, SpecError if
/// beta is not positive and strictly increasing on [1, D]. The result does
/// not depend on options.jobs.
SolutionSet enumerate(const DispersionSpec& spec, std::int64_t domain,
                      const EnumerateOptions& options = {});

/// Single-threaded enumerate that records the largest integer produced
/// anywhere in the fast path.
SolutionSet enumerate_traced(const DispersionSpec& spec, std::int64_t domain,
                             EnumerationTrace& trace);

/// Expands a family into its triads for the given n-triple.
std::vector<Triad> expand_family(const MFamily& family, std::int64_t n1, std::int64_t n2,
                                 std::int64_t n3);

}  // namespace triadic

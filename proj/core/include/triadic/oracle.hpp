#pragma once

#include <cstdint>

#include "triadic/enumerator.hpp"

namespace triadic {

inline constexpr std::int64_t kDefaultOracleCap = 100;

/// Reference enumerator: full search over n1 <= n2, n3, m1, m2 in [1, D]
/// with m3 = m1 + m2, accepting on the cleared-denominator identity and a
/// direct re-evaluation of the constraint flags. Shares no reduction or
/// pruning code with enumerate(). Products are formed in 128-bit integers and
/// are bounded by D * beta(D)^2; a CapacityError is thrown up front if that
/// bound does not fit. Throws CapacityError if D exceeds `cap`.
SolutionSet brute_enumerate(const DispersionSpec& spec, std::int64_t domain,
                            std::int64_t cap = kDefaultOracleCap);

}  // namespace triadic

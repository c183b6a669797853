#include "triadic/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "triadic/errors.hpp"

namespace triadic {

namespace {

using i128 = __int128;

bool constraints_hold(const ConstraintFlags& f, std::int64_t m1, std::int64_t n1, std::int64_t m2,
                      std::int64_t n2, std::int64_t m3, std::int64_t n3) {
  if (f.m_le_n && (m1 > n1 || m2 > n2 || m3 > n3)) return false;
  if (f.distinct_n && (n1 == n2 || n1 == n3 || n2 == n3)) return false;
  if (f.triangle) {
    const std::int64_t lo = n1 >= n2 ? n1 - n2 : n2 - n1;
    if (!(lo <= n3 && n3 <= n1 + n2)) return false;
  }
  if (f.odd_sum && ((n1 + n2 + n3) & 1) == 0) return false;
  return true;
}

}  // namespace

SolutionSet brute_enumerate(const DispersionSpec& spec, std::int64_t domain, std::int64_t cap) {
  if (domain < 1) throw std::invalid_argument("domain must be at least 1");
  if (domain > cap) {
    throw CapacityError("oracle refuses domain " + std::to_string(domain) + " above its cap " +
                        std::to_string(cap));
  }

  // Direct evaluation, no monotonicity assumptions.
  std::vector<std::int64_t> b(static_cast<std::size_t>(domain) + 1, 0);
  std::int64_t bmax = 0;
  for (std::int64_t n = 1; n <= domain; ++n) {
    b[static_cast<std::size_t>(n)] = spec.beta_at(n);
    bmax = std::max(bmax, b[static_cast<std::size_t>(n)]);
  }
  // Largest product formed below is m * b * b with m <= 2D.
  i128 bound;
  if (__builtin_mul_overflow(static_cast<i128>(bmax) * bmax, static_cast<i128>(2 * domain),
                             &bound) ||
      bound > (static_cast<i128>(1) << 125)) {
    throw CapacityError("oracle identity bound 2D*beta^2 exceeds 125 bits");
  }

  const auto& flags = spec.flags();
  SolutionSet out{spec, domain, {}};
  for (std::int64_t n1 = 1; n1 <= domain; ++n1) {
    const i128 b1 = b[static_cast<std::size_t>(n1)];
    for (std::int64_t n2 = n1; n2 <= domain; ++n2) {
      const i128 b2 = b[static_cast<std::size_t>(n2)];
      for (std::int64_t n3 = 1; n3 <= domain; ++n3) {
        const i128 b3 = b[static_cast<std::size_t>(n3)];
        const i128 b23 = b2 * b3;
        const i128 b13 = b1 * b3;
        const i128 b12 = b1 * b2;
        for (std::int64_t m1 = 1; m1 <= domain; ++m1) {
          for (std::int64_t m2 = 1; m2 <= domain; ++m2) {
            const std::int64_t m3 = m1 + m2;
            if (m3 > domain) break;
            if (n1 == n2 && m1 > m2) continue;  // keep the canonical copy only
            if (m1 * b23 + m2 * b13 != m3 * b12) continue;
            if (!constraints_hold(flags, m1, n1, m2, n2, m3, n3)) continue;
            out.triads.push_back({{m1, n1}, {m2, n2}, {m3, n3}});
          }
        }
      }
    }
  }
  std::sort(out.triads.begin(), out.triads.end());
  return out;
}

}  // namespace triadic

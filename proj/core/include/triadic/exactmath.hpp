#pragma once

#include <cstdint>
#include <stdexcept>

namespace triadic {

/// Raised when a positive-integer contract of the arithmetic kernel is broken.
class ArithmeticContractError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A fraction num/den with num, den >= 1 and gcd(num, den) = 1.
struct ReducedFraction {
  std::int64_t num = 1;
  std::int64_t den = 1;

  friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
};

/// Two irreducible fractions that are also crosswise coprime, so the product
/// (first.num * second.num) / (first.den * second.den) is irreducible without
/// ever having been formed.
struct CrossReducedProduct {
  ReducedFraction first;
  ReducedFraction second;

  friend bool operator==(const CrossReducedProduct&, const CrossReducedProduct&) = default;
};

/// Greatest common divisor of two positive integers (binary algorithm).
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// num/den divided through by gcd(num, den).
ReducedFraction reduce(std::int64_t num, std::int64_t den);

/// Brings (n1/d1) * (n2/d2) to complete irreducibility with four pairwise
/// reductions and no multiplication: n1/d1 internally, n2/d2 internally,
/// then first numerator against second denominator, then second numerator
/// against first denominator.
CrossReducedProduct cross_reduce(std::int64_t n1, std::int64_t d1, std::int64_t n2,
                                 std::int64_t d2);

/// cross_reduce plus the largest value any gcd, quotient or operand took on
/// along the way. Used by tests and the instrumented enumerator.
struct TracedCrossReduction {
  CrossReducedProduct product;
  std::int64_t peak = 0;
};

TracedCrossReduction cross_reduce_traced(std::int64_t n1, std::int64_t d1, std::int64_t n2,
                                         std::int64_t d2);

namespace detail {

// Branch-light binary gcd; operands must be positive.
inline std::int64_t gcd_unchecked(std::int64_t a, std::int64_t b) noexcept {
  auto u = static_cast<std::uint64_t>(a);
  auto v = static_cast<std::uint64_t>(b);
  const int uz = __builtin_ctzll(u);
  int vz = __builtin_ctzll(v);
  const int shift = uz < vz ? uz : vz;
  u >>= uz;
  for (;;) {
    v >>= vz;
    const auto diff = static_cast<std::int64_t>(v - u);
    if (diff == 0) break;
    vz = __builtin_ctzll(static_cast<std::uint64_t>(diff));
    if (v < u) u = v;
    v = static_cast<std::uint64_t>(diff < 0 ? -diff : diff);
  }
  return static_cast<std::int64_t>(u << shift);
}

// Divides a and b by their gcd in place; returns the gcd.
inline std::int64_t reduce_pair(std::int64_t& a, std::int64_t& b) noexcept {
  const std::int64_t g = gcd_unchecked(a, b);
  if (g != 1) {
    a /= g;
    b /= g;
  }
  return g;
}

// Internal reductions first, then the two crosswise ones, on positive operands.
// `observe` sees every intermediate value.
template <typename Observer>
inline CrossReducedProduct cross_reduce_core(std::int64_t n1, std::int64_t d1, std::int64_t n2,
                                             std::int64_t d2, Observer&& observe) noexcept {
  observe(reduce_pair(n1, d1));
  observe(n1);
  observe(d1);
  observe(reduce_pair(n2, d2));
  observe(n2);
  observe(d2);
  observe(reduce_pair(n1, d2));
  observe(n1);
  observe(d2);
  observe(reduce_pair(n2, d1));
  observe(n2);
  observe(d1);
  return {{n1, d1}, {n2, d2}};
}

}  // namespace detail

}  // namespace triadic

#include "triadic/exactmath.hpp"

#include <algorithm>
#include <string>

namespace triadic {

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) {
    throw ArithmeticContractError(std::string(what) + " must be a positive integer, got " +
                                  std::to_string(v));
  }
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  require_positive(a, "gcd: a");
  require_positive(b, "gcd: b");
  return detail::gcd_unchecked(a, b);
}

ReducedFraction reduce(std::int64_t num, std::int64_t den) {
  require_positive(num, "reduce: numerator");
  require_positive(den, "reduce: denominator");
  detail::reduce_pair(num, den);
  return {num, den};
}

CrossReducedProduct cross_reduce(std::int64_t n1, std::int64_t d1, std::int64_t n2,
                                 std::int64_t d2) {
  require_positive(n1, "cross_reduce: n1");
  require_positive(d1, "cross_reduce: d1");
  require_positive(n2, "cross_reduce: n2");
  require_positive(d2, "cross_reduce: d2");
  return detail::cross_reduce_core(n1, d1, n2, d2, [](std::int64_t) {});
}

TracedCrossReduction cross_reduce_traced(std::int64_t n1, std::int64_t d1, std::int64_t n2,
                                         std::int64_t d2) {
  require_positive(n1, "cross_reduce: n1");
  require_positive(d1, "cross_reduce: d1");
  require_positive(n2, "cross_reduce: n2");
  require_positive(d2, "cross_reduce: d2");
  TracedCrossReduction out;
  out.product = detail::cross_reduce_core(
      n1, d1, n2, d2, [&out](std::int64_t v) { out.peak = std::max(out.peak, v); });
  return out;
}

}  // namespace triadic

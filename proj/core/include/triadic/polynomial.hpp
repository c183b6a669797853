#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace triadic {

/// Integer-coefficient polynomial in one variable n. coefficients()[i] is the
/// coefficient of n^i; trailing zeros are trimmed.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coefficients);

  /// Parses expressions such as "n*(n+1)", "n^2+1", "3n^3 - n + 2".
  /// Accepts + - * ^ (non-negative integer exponents), parentheses, integer
  /// literals and the variable n. Throws SpecError on malformed input.
  static Polynomial parse(std::string_view expression);

  const std::vector<std::int64_t>& coefficients() const noexcept { return coefficients_; }
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

  /// Exact value at n, or nullopt if it does not fit in int64.
  std::optional<std::int64_t> evaluate(std::int64_t n) const noexcept;

  /// Canonical text form, e.g. "n^2+n" or "n^2+1".
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;

private:
  void trim();

  std::vector<std::int64_t> coefficients_;
};

}  // namespace triadic

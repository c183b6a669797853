#include "triadic/polynomial.hpp"

#include <cctype>
#include <utility>

#include "triadic/errors.hpp"

namespace triadic {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw SpecError("polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw SpecError("polynomial coefficient overflow");
  return r;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    Polynomial p = expression();
    skip_space();
    if (!at_end()) fail("unexpected character");
    return p;
  }

private:
  Polynomial expression() {
    Polynomial acc = term();
    for (;;) {
      skip_space();
      if (consume('+')) {
        acc = acc + term();
      } else if (consume('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skip_space();
      if (consume('*')) {
        acc = acc * unary();
      } else if (!at_end() && (peek() == 'n' || peek() == '(')) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    skip_space();
    if (consume('-')) return Polynomial({0}) - unary();
    if (consume('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    skip_space();
    if (!consume('^')) return base;
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("exponent must be a non-negative integer");
    }
    const std::int64_t exponent = integer();
    if (exponent > 64) fail("exponent too large");
    Polynomial result({1});
    for (std::int64_t i = 0; i < exponent; ++i) result = result * base;
    return result;
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of expression");
    const char c = peek();
    if (c == 'n') {
      ++pos_;
      return Polynomial({0, 1});
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      skip_space();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial({integer()});
    fail("unexpected character");
  }

  std::int64_t integer() {
    std::int64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = checked_add(checked_mul(value, 10), peek() - '0');
      ++pos_;
    }
    return value;
  }

  bool consume(char c) {
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw SpecError("cannot parse polynomial \"" + std::string(text_) + "\": " + why +
                    " at offset " + std::to_string(pos_));
  }

  char peek() const { return text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial::Polynomial(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::parse(std::string_view expression) { return Parser(expression).parse(); }

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

std::optional<std::int64_t> Polynomial::evaluate(std::int64_t n) const noexcept {
  std::int64_t acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    if (__builtin_mul_overflow(acc, n, &acc)) return std::nullopt;
    if (__builtin_add_overflow(acc, *it, &acc)) return std::nullopt;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = coefficients_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (i == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += 'n';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<std::int64_t> out(std::max(coefficients_.size(), other.coefficients_.size()), 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) out[i] = coefficients_[i];
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    out[i] = checked_add(out[i], other.coefficients_[i]);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  std::vector<std::int64_t> negated(other.coefficients_.size());
  for (std::size_t i = 0; i < negated.size(); ++i) {
    negated[i] = checked_mul(other.coefficients_[i], -1);
  }
  return *this + Polynomial(std::move(negated));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (coefficients_.empty() || other.coefficients_.empty()) return Polynomial();
  std::vector<std::int64_t> out(coefficients_.size() + other.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(coefficients_[i], other.coefficients_[j]));
    }
  }
  return Polynomial(std::move(out));
}

}  // namespace triadic

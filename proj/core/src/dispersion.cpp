#include "triadic/dispersion.hpp"

#include <utility>

#include "json.hpp"
#include "triadic/errors.hpp"

namespace triadic {

namespace {

using i128 = __int128;

i128 mul3(std::int64_t a, std::int64_t b, std::int64_t c) {
  i128 ab = static_cast<i128>(a) * b;
  i128 out;
  if (__builtin_mul_overflow(ab, static_cast<i128>(c), &out)) {
    throw CapacityError("resonance identity exceeds 127-bit arithmetic");
  }
  return out;
}

bool read_flag(const nlohmann::json& flags, const char* key) {
  if (!flags.contains(key)) return false;
  const auto& v = flags.at(key);
  if (!v.is_boolean()) throw SpecError(std::string("flag \"") + key + "\" must be a boolean");
  return v.get<bool>();
}

}  // namespace

Triad Triad::canonical() const {
  if (std::tie(k2.n, k2.m) < std::tie(k1.n, k1.m)) return {k2, k1, k3};
  return *this;
}

DispersionSpec::DispersionSpec(std::string name, Polynomial beta, ConstraintFlags flags)
    : name_(std::move(name)), beta_(std::move(beta)), flags_(flags) {
  if (beta_.degree() < 1) throw SpecError("beta must be a non-constant polynomial in n");
  if (beta_.coefficients().back() <= 0) {
    throw SpecError("beta must have a positive leading coefficient");
  }
}

DispersionSpec DispersionSpec::sphere() {
  return {"sphere", Polynomial({0, 1, 1}), {true, true, true, true}};
}

DispersionSpec DispersionSpec::channel() {
  return {"channel", Polynomial({1, 0, 1}), {true, true, false, false}};
}

DispersionSpec DispersionSpec::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("dispersion spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SpecError("dispersion spec must be a JSON object");

  std::string name = "custom";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw SpecError("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }

  if (!doc.contains("beta")) throw SpecError("dispersion spec lacks \"beta\"");
  const auto& beta_doc = doc["beta"];
  Polynomial beta;
  if (beta_doc.is_string()) {
    beta = Polynomial::parse(beta_doc.get<std::string>());
  } else if (beta_doc.is_array()) {
    std::vector<std::int64_t> coefficients;
    for (const auto& c : beta_doc) {
      if (!c.is_number_integer()) throw SpecError("beta coefficients must be integers");
      coefficients.push_back(c.get<std::int64_t>());
    }
    beta = Polynomial(std::move(coefficients));
  } else {
    throw SpecError("\"beta\" must be an expression string or a coefficient list");
  }

  ConstraintFlags flags{false, false, false, false};
  if (doc.contains("flags")) {
    const auto& f = doc["flags"];
    if (!f.is_object()) throw SpecError("\"flags\" must be an object");
    for (const auto& [key, value] : f.items()) {
      if (key != "m_le_n" && key != "distinct_n" && key != "triangle" && key != "odd_sum") {
        throw SpecError("unknown flag \"" + key + "\"");
      }
    }
    flags.m_le_n = read_flag(f, "m_le_n");
    flags.distinct_n = read_flag(f, "distinct_n");
    flags.triangle = read_flag(f, "triangle");
    flags.odd_sum = read_flag(f, "odd_sum");
  }
  return {std::move(name), std::move(beta), flags};
}

std::string DispersionSpec::to_json() const {
  nlohmann::ordered_json doc;
  doc["name"] = name_;
  doc["beta"] = beta_.to_string();
  doc["flags"] = {{"m_le_n", flags_.m_le_n},
                  {"distinct_n", flags_.distinct_n},
                  {"triangle", flags_.triangle},
                  {"odd_sum", flags_.odd_sum}};
  return doc.dump();
}

std::int64_t DispersionSpec::beta_at(std::int64_t n) const {
  const auto v = beta_.evaluate(n);
  if (!v) throw CapacityError("beta(" + std::to_string(n) + ") overflows 64-bit integers");
  return *v;
}

BetaTable DispersionSpec::table(std::int64_t domain) const {
  if (domain < 1) throw SpecError("domain must be at least 1");
  BetaTable out(static_cast<std::size_t>(domain) + 1, 0);
  for (std::int64_t n = 1; n <= domain; ++n) {
    const std::int64_t b = beta_at(n);
    if (b < 1) {
      throw SpecError("beta(" + std::to_string(n) + ") = " + std::to_string(b) +
                      " is not positive");
    }
    if (n > 1 && b <= out[static_cast<std::size_t>(n - 1)]) {
      throw SpecError("beta is not strictly increasing at n = " + std::to_string(n));
    }
    out[static_cast<std::size_t>(n)] = b;
  }
  return out;
}

bool omega_compare(const DispersionSpec& spec, const Triad& t) {
  const std::int64_t b1 = spec.beta_at(t.k1.n);
  const std::int64_t b2 = spec.beta_at(t.k2.n);
  const std::int64_t b3 = spec.beta_at(t.k3.n);
  const i128 lhs1 = mul3(t.k1.m, b2, b3);
  const i128 lhs2 = mul3(t.k2.m, b1, b3);
  const i128 rhs = mul3(t.k3.m, b1, b2);
  i128 lhs;
  if (__builtin_add_overflow(lhs1, lhs2, &lhs)) {
    throw CapacityError("resonance identity exceeds 127-bit arithmetic");
  }
  return lhs == rhs;
}

bool admissible(const DispersionSpec& spec, const Triad& t) {
  const auto& f = spec.flags();
  if (t.k1.m + t.k2.m != t.k3.m) return false;
  if (f.m_le_n) {
    for (const auto& k : t.vectors()) {
      if (k.m > k.n) return false;
    }
  }
  const std::int64_t n1 = t.k1.n;
  const std::int64_t n2 = t.k2.n;
  const std::int64_t n3 = t.k3.n;
  if (f.distinct_n && (n1 == n2 || n2 == n3 || n1 == n3)) return false;
  if (f.triangle) {
    const std::int64_t diff = n1 > n2 ? n1 - n2 : n2 - n1;
    if (n3 < diff || n3 > n1 + n2) return false;
  }
  if (f.odd_sum && (n1 + n2 + n3) % 2 == 0) return false;
  return true;
}

}  // namespace triadic

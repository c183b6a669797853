#include "triadic/odegen.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace triadic {

namespace {

constexpr const char* kConvention =
    "a mode shared by t triads carries prefactor 1/t on each of its t terms";

std::string vector_text(const WaveVector& k) {
  return "(" + std::to_string(k.m) + "," + std::to_string(k.n) + ")";
}

std::string alpha_text(const OdeSystem& s, const OdeTerm& term, const CoefficientTable* table) {
  if (table != nullptr) {
    const auto it = table->find({s.triad_ids[term.triad], term.slot});
    if (it != table->end()) return "(" + it->second + ")";
  }
  return "a" + std::to_string(term.alpha_id);
}

std::string term_text(const OdeSystem& s, const OdeTerm& term, const CoefficientTable* table) {
  return alpha_text(s, term, table) + "*A" + std::to_string(s.mode_labels[term.factors[0]]) +
         "*A" + std::to_string(s.mode_labels[term.factors[1]]);
}

std::string emit_text(const OdeSystem& s, const CoefficientTable* table) {
  std::string out = "# prefactor: " + std::string(kConvention) + "\n";
  for (std::size_t j = 0; j < s.triads.size(); ++j) {
    const auto& t = s.triads[j];
    out += "# triad T" + std::to_string(s.triad_ids[j]) + ": " + vector_text(t.k1) + " + " +
           vector_text(t.k2) + " = " + vector_text(t.k3) + "\n";
  }
  for (std::size_t i = 0; i < s.modes.size(); ++i) {
    out += "# A" + std::to_string(s.mode_labels[i]) + " = " + vector_text(s.modes[i]) + "\n";
  }
  for (const auto& [a, b] : s.double_links) {
    out += "# note: triads T" + std::to_string(s.triad_ids[a]) + " and T" +
           std::to_string(s.triad_ids[b]) + " share two modes\n";
  }
  for (const auto& eq : s.equations) {
    out += "dA" + std::to_string(s.mode_labels[eq.mode]) + "/dt = ";
    if (eq.terms.size() == 1 && eq.terms[0].prefactor_den == 1) {
      out += term_text(s, eq.terms[0], table);
    } else {
      const auto& first = eq.terms.front();
      out += std::to_string(first.prefactor_num) + "/" + std::to_string(first.prefactor_den) + "*(";
      for (std::size_t i = 0; i < eq.terms.size(); ++i) {
        if (i) out += " + ";
        out += term_text(s, eq.terms[i], table);
      }
      out += ")";
    }
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json structured(const OdeSystem& s, const CoefficientTable* table) {
  nlohmann::ordered_json doc;
  doc["convention"] = kConvention;
  doc["triads"] = nlohmann::ordered_json::array();
  for (std::size_t j = 0; j < s.triads.size(); ++j) {
    const auto& t = s.triads[j];
    doc["triads"].push_back({{"id", s.triad_ids[j]},
                             {"vectors", {{t.k1.m, t.k1.n}, {t.k2.m, t.k2.n}, {t.k3.m, t.k3.n}}}});
  }
  doc["modes"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.modes.size(); ++i) {
    doc["modes"].push_back({{"m", s.modes[i].m}, {"n", s.modes[i].n}, {"label", s.mode_labels[i]}});
  }
  doc["equations"] = nlohmann::ordered_json::array();
  for (const auto& eq : s.equations) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& term : eq.terms) {
      nlohmann::ordered_json t;
      t["alpha_id"] = term.alpha_id;
      t["factor_mode_indices"] = {term.factors[0], term.factors[1]};
      t["prefactor_num"] = term.prefactor_num;
      t["prefactor_den"] = term.prefactor_den;
      if (table != nullptr) {
        const auto it = table->find({s.triad_ids[term.triad], term.slot});
        if (it != table->end()) t["alpha_value"] = it->second;
      }
      terms.push_back(std::move(t));
    }
    doc["equations"].push_back({{"mode_index", eq.mode}, {"terms", std::move(terms)}});
  }
  if (!s.double_links.empty()) {
    doc["double_links"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : s.double_links) {
      doc["double_links"].push_back({s.triad_ids[a], s.triad_ids[b]});
    }
  }
  return doc;
}

}  // namespace

OdeSystem generate(std::span<const Triad> component, std::span<const std::size_t> triad_ids) {
  if (!triad_ids.empty() && triad_ids.size() != component.size()) {
    throw std::invalid_argument("generate: triad_ids must match the component size");
  }
  OdeSystem s;
  s.triads.assign(component.begin(), component.end());
  for (std::size_t j = 0; j < component.size(); ++j) {
    s.triad_ids.push_back(triad_ids.empty() ? j : triad_ids[j]);
  }

  // Mode index of every (triad, slot).
  std::vector<std::array<std::size_t, 3>> slot_mode(component.size());
  for (std::size_t j = 0; j < component.size(); ++j) {
    const auto ks = component[j].vectors();
    for (int slot = 0; slot < 3; ++slot) {
      const auto it = std::find(s.modes.begin(), s.modes.end(), ks[slot]);
      if (it == s.modes.end()) {
        s.modes.push_back(ks[slot]);
        s.mode_labels.push_back(3 * j + slot + 1);
        slot_mode[j][slot] = s.modes.size() - 1;
      } else {
        slot_mode[j][slot] = static_cast<std::size_t>(it - s.modes.begin());
      }
    }
  }

  std::vector<std::int64_t> membership(s.modes.size(), 0);
  for (const auto& slots : slot_mode) {
    for (std::size_t mode : slots) ++membership[mode];
  }

  s.equations.resize(s.modes.size());
  for (std::size_t i = 0; i < s.modes.size(); ++i) s.equations[i].mode = i;
  for (std::size_t j = 0; j < component.size(); ++j) {
    for (int slot = 0; slot < 3; ++slot) {
      const std::size_t mode = slot_mode[j][slot];
      OdeTerm term;
      term.alpha_id = 3 * j + slot + 1;
      term.triad = j;
      term.slot = slot + 1;
      std::size_t f = 0;
      for (int other = 0; other < 3; ++other) {
        if (other != slot) term.factors[f++] = slot_mode[j][other];
      }
      term.prefactor_den = membership[mode];
      s.equations[mode].terms.push_back(term);
    }
  }

  for (std::size_t a = 0; a < component.size(); ++a) {
    for (std::size_t b = a + 1; b < component.size(); ++b) {
      int common = 0;
      for (std::size_t x : slot_mode[a]) {
        if (std::find(slot_mode[b].begin(), slot_mode[b].end(), x) != slot_mode[b].end()) ++common;
      }
      if (common >= 2) s.double_links.emplace_back(a, b);
    }
  }
  return s;
}

OdeFormat parse_ode_format(std::string_view name) {
  if (name == "text") return OdeFormat::text;
  if (name == "json" || name == "structured") return OdeFormat::structured;
  throw std::invalid_argument("unknown ODE output format \"" + std::string(name) + "\"");
}

std::string emit(const OdeSystem& system, OdeFormat format, const CoefficientTable* coefficients) {
  if (format == OdeFormat::text) return emit_text(system, coefficients);
  return structured(system, coefficients).dump(2) + "\n";
}

std::string emit(const OdeSystem& system, std::string_view format,
                 const CoefficientTable* coefficients) {
  return emit(system, parse_ode_format(format), coefficients);
}

std::string emit_all(std::span<const OdeSystem> systems, OdeFormat format,
                     const CoefficientTable* coefficients) {
  if (systems.empty()) return {};
  if (format == OdeFormat::structured) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& s : systems) doc.push_back(structured(s, coefficients));
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    if (i) out += "\n";
    out += emit_text(systems[i], coefficients);
  }
  return out;
}

}  // namespace triadic

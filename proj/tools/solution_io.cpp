#include "solution_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "triadic/errors.hpp"
#include "triadic/version.hpp"

namespace triadic::cli {

namespace {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position p;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& why) {
  const Position p = position_of(text, offset);
  throw ParseError(why, p.line, p.column);
}

// Offset of the index-th element of the top-level "triads" array, or npos.
std::size_t triad_offset(std::string_view text, std::size_t index) {
  const std::size_t key = text.find("\"triads\"");
  if (key == std::string_view::npos) return key;
  std::size_t i = text.find('[', key);
  if (i == std::string_view::npos) return i;
  int depth = 0;
  std::size_t seen = 0;
  bool expect_element = true;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '"') {
      if (depth == 1 && expect_element && seen++ == index) return i;
      expect_element = false;
      for (++i; i < text.size() && text[i] != '"'; ++i) {
        if (text[i] == '\\') ++i;
      }
      continue;
    }
    if (c == '[' || c == '{') {
      if (depth == 1 && expect_element) {
        if (seen++ == index) return i;
        expect_element = false;
      }
      ++depth;
    } else if (c == ']' || c == '}') {
      if (--depth == 0) break;
    } else if (c == ',' && depth == 1) {
      expect_element = true;
    } else if (depth == 1 && expect_element && c != ' ' && c != '\n' && c != '\r' && c != '\t') {
      if (seen++ == index) return i;
      expect_element = false;
    }
  }
  return std::string_view::npos;
}

DispersionSpec spec_from_meta(const nlohmann::json& meta, std::string_view text) {
  if (meta.contains("dispersion_spec")) {
    try {
      return DispersionSpec::from_json(meta["dispersion_spec"].dump());
    } catch (const SpecError& e) {
      fail_at(text, text.find("\"dispersion_spec\""), e.what());
    }
  }
  if (!meta.contains("dispersion") || !meta["dispersion"].is_string()) {
    fail_at(text, text.find("\"meta\""), "meta.dispersion must name a dispersion law");
  }
  try {
    return preset_dispersion(meta["dispersion"].get<std::string>());
  } catch (const SpecError& e) {
    fail_at(text, text.find("\"dispersion\""), e.what());
  }
}

void check_triad(const SolutionSet& set, const Triad& t, std::string_view text, std::size_t offset) {
  for (const auto& k : t.vectors()) {
    if (k.m < 1 || k.n < 1) fail_at(text, offset, "wave vector components must be positive");
    if (set.domain > 0 && (k.m > set.domain || k.n > set.domain)) {
      fail_at(text, offset, "triad lies outside the declared domain");
    }
  }
  bool ok = false;
  try {
    ok = admissible(set.spec, t) && omega_compare(set.spec, t);
  } catch (const CapacityError& e) {
    fail_at(text, offset, e.what());
  }
  if (!ok) fail_at(text, offset, "triad is not a resonance of dispersion " + set.spec.name());
}

void finish(SolutionSet& set) {
  for (auto& t : set.triads) t = t.canonical();
  std::sort(set.triads.begin(), set.triads.end());
  set.triads.erase(std::unique(set.triads.begin(), set.triads.end()), set.triads.end());
}

SolutionSet read_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "malformed JSON solution file");
  }
  if (!doc.is_object() || !doc.contains("meta") || !doc["meta"].is_object()) {
    fail_at(text, 0, "solution file must be an object with a \"meta\" object");
  }
  const auto& meta = doc["meta"];
  SolutionSet set{spec_from_meta(meta, text), 0, {}};
  if (meta.contains("domain")) {
    if (!meta["domain"].is_number_integer() || meta["domain"].get<std::int64_t>() < 1) {
      fail_at(text, text.find("\"domain\""), "meta.domain must be a positive integer");
    }
    set.domain = meta["domain"].get<std::int64_t>();
  }
  if (!doc.contains("triads") || !doc["triads"].is_array()) {
    fail_at(text, 0, "solution file lacks a \"triads\" array");
  }
  const auto& rows = doc["triads"];
  std::int64_t largest = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const bool shape_ok = row.is_array() && row.size() == 6 &&
                          std::all_of(row.begin(), row.end(),
                                      [](const auto& v) { return v.is_number_integer(); });
    if (!shape_ok) {
      fail_at(text, triad_offset(text, i), "each triad must be [n1,m1,n2,m2,n3,m3]");
    }
    std::int64_t v[6];
    for (std::size_t j = 0; j < 6; ++j) {
      v[j] = row[j].get<std::int64_t>();
      largest = std::max(largest, v[j]);
    }
    const Triad t{{v[1], v[0]}, {v[3], v[2]}, {v[5], v[4]}};
    check_triad(set, t, text, triad_offset(text, i));
    set.triads.push_back(t);
  }
  if (set.domain == 0) set.domain = std::max<std::int64_t>(largest, 1);
  if (meta.contains("count") && meta["count"].is_number_integer() &&
      meta["count"].get<std::size_t>() != rows.size()) {
    fail_at(text, text.find("\"count\""), "meta.count does not match the number of triads");
  }
  finish(set);
  return set;
}

SolutionSet read_csv(std::string_view text, const DispersionSpec* fallback) {
  std::optional<DispersionSpec> spec;
  if (fallback != nullptr) spec = *fallback;
  std::int64_t domain = 0;
  std::vector<std::pair<Triad, std::size_t>> rows;

  std::size_t offset = 0;
  bool header_seen = false;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(offset, end - offset);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t line_start = offset;
    offset = end + 1;
    if (line.empty()) continue;

    if (line.front() == '#') {
      const std::size_t s = line.find("spec=");
      if (s != std::string_view::npos) {
        try {
          spec = DispersionSpec::from_json(line.substr(s + 5));
        } catch (const SpecError& e) {
          fail_at(text, line_start + s, e.what());
        }
      } else if (const std::size_t d = line.find("dispersion="); d != std::string_view::npos) {
        const std::string_view rest = line.substr(d + 11);
        try {
          spec = preset_dispersion(rest.substr(0, rest.find(' ')));
        } catch (const SpecError& e) {
          fail_at(text, line_start + d, e.what());
        }
      }
      if (const std::size_t d = line.find("domain="); d != std::string_view::npos) {
        const std::string_view rest = line.substr(d + 7);
        std::from_chars(rest.data(), rest.data() + rest.size(), domain);
      }
      continue;
    }
    if (!header_seen && line.starts_with("n1")) {
      header_seen = true;
      continue;
    }

    std::int64_t v[6];
    std::size_t pos = 0;
    for (int j = 0; j < 6; ++j) {
      const char* first = line.data() + pos;
      const char* last = line.data() + line.size();
      const auto [ptr, ec] = std::from_chars(first, last, v[j]);
      if (ec != std::errc()) {
        fail_at(text, line_start + pos, "expected an integer in column " + std::to_string(j + 1));
      }
      pos = static_cast<std::size_t>(ptr - line.data());
      if (j < 5) {
        if (pos >= line.size() || line[pos] != ',') {
          fail_at(text, line_start + pos, "expected ',' after column " + std::to_string(j + 1));
        }
        ++pos;
      }
    }
    if (pos != line.size()) fail_at(text, line_start + pos, "trailing characters after six columns");
    rows.push_back({Triad{{v[1], v[0]}, {v[3], v[2]}, {v[5], v[4]}}, line_start});
  }
  if (!spec) fail_at(text, 0, "CSV solution file does not name its dispersion law");

  SolutionSet set{*spec, domain, {}};
  std::int64_t largest = 0;
  for (const auto& [t, at] : rows) {
    check_triad(set, t, text, at);
    for (const auto& k : t.vectors()) largest = std::max({largest, k.m, k.n});
    set.triads.push_back(t);
  }
  if (set.domain == 0) set.domain = std::max<std::int64_t>(largest, 1);
  finish(set);
  return set;
}

}  // namespace

DispersionSpec preset_dispersion(std::string_view name) {
  if (name == "sphere") return DispersionSpec::sphere();
  if (name == "channel") return DispersionSpec::channel();
  throw SpecError("unknown dispersion preset \"" + std::string(name) + "\"");
}

std::string solution_json(const SolutionSet& set) {
  nlohmann::ordered_json meta;
  meta["dispersion"] = set.spec.name();
  meta["domain"] = set.domain;
  meta["generator_version"] = std::string("triadic ") + kVersion;
  meta["count"] = set.triads.size();
  meta["dispersion_spec"] = nlohmann::ordered_json::parse(set.spec.to_json());

  std::string out = "{\"meta\":" + meta.dump() + ",\n\"triads\":[";
  for (std::size_t i = 0; i < set.triads.size(); ++i) {
    const auto& t = set.triads[i];
    out += i ? ",\n" : "\n";
    out += "[" + std::to_string(t.k1.n) + "," + std::to_string(t.k1.m) + "," +
           std::to_string(t.k2.n) + "," + std::to_string(t.k2.m) + "," + std::to_string(t.k3.n) +
           "," + std::to_string(t.k3.m) + "]";
  }
  out += "\n]}\n";
  return out;
}

std::string solution_csv(const SolutionSet& set) {
  std::string out = "# dispersion=" + set.spec.name() + " domain=" + std::to_string(set.domain) +
                    " spec=" + set.spec.to_json() + "\n";
  out += "n1,m1,n2,m2,n3,m3\n";
  for (const auto& t : set.triads) {
    out += std::to_string(t.k1.n) + "," + std::to_string(t.k1.m) + "," + std::to_string(t.k2.n) +
           "," + std::to_string(t.k2.m) + "," + std::to_string(t.k3.n) + "," +
           std::to_string(t.k3.m) + "\n";
  }
  return out;
}

SolutionSet read_solution(std::string_view text, const DispersionSpec* fallback) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {fallback != nullptr ? *fallback : DispersionSpec::sphere(), 1, {}};
  }
  if (text[first] == '{') return read_json(text);
  return read_csv(text, fallback);
}

}  // namespace triadic::cli

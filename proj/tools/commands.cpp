#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "solution_io.hpp"
#include "triadic/canonical.hpp"
#include "triadic/errors.hpp"
#include "triadic/odegen.hpp"
#include "triadic/oracle.hpp"
#include "triadic/topology.hpp"
#include "triadic/version.hpp"

namespace triadic::cli {

namespace {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot write " + path.string());
  os << content;
  os.flush();
  if (!os) throw IoError("error while writing " + path.string());
}

std::filesystem::path ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create directory " + dir);
  return dir;
}

DispersionSpec resolve_dispersion(const std::string& selector) {
  if (selector.starts_with("spec:")) return DispersionSpec::from_json(read_file(selector.substr(5)));
  return preset_dispersion(selector);
}

std::int64_t require_domain(const RunConfig& config) {
  if (config.domain < 1) throw UsageError("--domain must be a positive integer");
  return config.domain;
}

SolutionSet load_or_enumerate(const RunConfig& config) {
  if (!config.input.empty()) {
    const DispersionSpec fallback = resolve_dispersion(config.dispersion);
    return read_solution(read_file(config.input), &fallback);
  }
  return enumerate(resolve_dispersion(config.dispersion), require_domain(config),
                   {std::max(1u, config.jobs)});
}

std::string triad_text(const Triad& t) {
  auto v = [](const WaveVector& k) {
    return "(" + std::to_string(k.m) + "," + std::to_string(k.n) + ")";
  };
  return v(t.k1) + "+" + v(t.k2) + "=" + v(t.k3);
}

std::vector<std::int64_t> parse_radii(const std::string& text) {
  if (text.empty()) throw UsageError("--radii is required");
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
      throw UsageError("bad radius \"" + std::string(s) + "\"");
    }
    return v;
  };
  std::vector<std::int64_t> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    for (std::size_t p; (p = rest.find(':')) != std::string_view::npos; rest.remove_prefix(p + 1)) {
      parts.push_back(rest.substr(0, p));
    }
    parts.push_back(rest);
    if (parts.size() != 3) throw UsageError("--radii range must be start:stop:step");
    const std::int64_t start = number(parts[0]);
    const std::int64_t stop = number(parts[1]);
    const std::int64_t step = number(parts[2]);
    if (step < 1) throw UsageError("--radii step must be positive");
    for (std::int64_t r = start; r <= stop; r += step) out.push_back(r);
  } else {
    std::string_view rest = text;
    for (;;) {
      const std::size_t p = rest.find(',');
      out.push_back(number(rest.substr(0, p)));
      if (p == std::string_view::npos) break;
      rest.remove_prefix(p + 1);
    }
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] < out[i - 1]) throw UsageError("--radii must be ascending");
  }
  return out;
}

CoefficientTable read_coefficients(const std::string& path) {
  CoefficientTable table;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#' || line.starts_with("triad")) continue;
    const std::size_t c1 = line.find(',');
    const std::size_t c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    std::size_t triad = 0;
    int slot = 0;
    const bool ok =
        c2 != std::string::npos &&
        std::from_chars(line.data(), line.data() + c1, triad).ptr == line.data() + c1 &&
        std::from_chars(line.data() + c1 + 1, line.data() + c2, slot).ptr == line.data() + c2 &&
        slot >= 1 && slot <= 3 && c2 + 1 < line.size();
    if (!ok) throw ParseError("coefficient rows must be triad,slot,value", line_no, 1);
    table[{triad, slot}] = line.substr(c2 + 1);
  }
  return table;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecError& e) {
    err << "error: invalid dispersion: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "error: capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace

int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string format = config.format.empty() ? "json" : config.format;
    if (format != "json" && format != "csv") {
      throw UsageError("enumerate writes json or csv, not " + format);
    }
    const DispersionSpec spec = resolve_dispersion(config.dispersion);
    const SolutionSet set = enumerate(spec, require_domain(config), {std::max(1u, config.jobs)});
    if (!config.out.empty()) {
      write_file(config.out, format == "json" ? solution_json(set) : solution_csv(set));
    }
    out << "solutions=" << set.triads.size() << " domain=" << set.domain
        << " dispersion=" << spec.name() << "\n";
    return kExitOk;
  });
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DispersionSpec spec = resolve_dispersion(config.dispersion);
    const std::int64_t domain = require_domain(config);
    if (domain > config.oracle_cap) {
      throw CapacityError("check refuses domain " + std::to_string(domain) +
                          ": the brute-force oracle is capped at " +
                          std::to_string(config.oracle_cap));
    }
    const SolutionSet fast = enumerate(spec, domain, {std::max(1u, config.jobs)});
    const SolutionSet slow = brute_enumerate(spec, domain, config.oracle_cap);

    std::vector<std::pair<char, Triad>> diff;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < fast.triads.size() || j < slow.triads.size()) {
      if (j == slow.triads.size() || (i < fast.triads.size() && fast.triads[i] < slow.triads[j])) {
        diff.emplace_back('+', fast.triads[i++]);
      } else if (i == fast.triads.size() || slow.triads[j] < fast.triads[i]) {
        diff.emplace_back('-', slow.triads[j++]);
      } else {
        ++i;
        ++j;
      }
    }
    out << "check dispersion=" << spec.name() << " domain=" << domain
        << " fast=" << fast.triads.size() << " oracle=" << slow.triads.size()
        << " differences=" << diff.size() << "\n";
    if (diff.empty()) return kExitOk;
    for (std::size_t k = 0; k < std::min<std::size_t>(diff.size(), 10); ++k) {
      out << (diff[k].first == '+' ? "  only in fast path: " : "  only in oracle:    ")
          << triad_text(diff[k].second) << "\n";
    }
    return kExitMismatch;
  });
}

int cmd_topology(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string format = config.format.empty() ? "json" : config.format;
    if (format != "json" && format != "dot") {
      throw UsageError("topology writes json (census) or dot (census plus graphs), not " + format);
    }
    const SolutionSet set = load_or_enumerate(config);
    const SolutionGraphs graphs = build_graphs(set);
    const auto classes = classify_components(graphs.triads);
    const auto totals = census_totals(classes);
    const auto histogram =
        multiplicity_histogram(set, parse_multiplicity_mode(config.multiplicity));

    nlohmann::ordered_json census;
    census["meta"] = {{"dispersion", set.spec.name()},
                      {"domain", set.domain},
                      {"triads", set.triads.size()},
                      {"components", classes.size()},
                      {"generator_version", std::string("triadic ") + kVersion}};
    census["totals"] = nlohmann::ordered_json::object();
    for (const auto& [label, count] : totals) census["totals"][label] = count;

    std::map<std::string, std::pair<const ComponentClass*, std::size_t>> by_certificate;
    for (const auto& c : classes) {
      auto& slot = by_certificate[c.certificate];
      if (slot.first == nullptr) slot.first = &c;
      ++slot.second;
    }
    census["classes"] = nlohmann::ordered_json::array();
    std::vector<std::pair<const ComponentClass*, std::size_t>> grouped;
    for (const auto& [cert, entry] : by_certificate) grouped.push_back(entry);
    std::sort(grouped.begin(), grouped.end(), [](const auto& a, const auto& b) {
      return a.first->triads.front() < b.first->triads.front();
    });
    for (const auto& [first, count] : grouped) {
      census["classes"].push_back({{"certificate_hash", certificate_hash(first->certificate)},
                                   {"class_label", first->label()},
                                   {"triad_count", first->triad_count()},
                                   {"components", count},
                                   {"certificate", first->certificate}});
    }
    census["components"] = nlohmann::ordered_json::array();
    for (const auto& c : classes) {
      nlohmann::ordered_json entry;
      entry["triads"] = c.triads;
      entry["class_label"] = c.label();
      entry["certificate_hash"] = certificate_hash(c.certificate);
      if (c.has_double_link) entry["double_link"] = true;
      census["components"].push_back(std::move(entry));
    }

    if (!config.out.empty()) {
      const auto dir = ensure_directory(config.out);
      write_file(dir / "census.json", census.dump(2) + "\n");
      write_file(dir / "histogram.csv", histogram_csv(histogram));
      if (format == "dot") {
        write_file(dir / "vectors.dot", vector_graph_dot(graphs.vectors));
        write_file(dir / "triads.dot", triad_graph_dot(graphs.triads));
      }
    }
    out << "triads=" << set.triads.size() << " components=" << classes.size();
    for (const auto& [label, count] : totals) out << " " << label << "=" << count;
    out << "\n";
    return kExitOk;
  });
}

int cmd_ode(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const OdeFormat format = parse_ode_format(config.format.empty() ? "text" : config.format);
    const SolutionSet set = load_or_enumerate(config);
    std::optional<CoefficientTable> table;
    if (!config.coefficients.empty()) table = read_coefficients(config.coefficients);
    const CoefficientTable* coefficients = table ? &*table : nullptr;

    const SolutionGraphs graphs = build_graphs(set);
    std::vector<OdeSystem> systems;
    for (const auto& component : graphs.triads.components) {
      std::vector<Triad> members;
      for (std::size_t id : component) members.push_back(set.triads[id]);
      systems.push_back(generate(members, component));
    }

    if (config.out.empty()) {
      out << emit_all(systems, format, coefficients);
      return kExitOk;
    }
    if (systems.empty()) return kExitOk;
    const auto dir = ensure_directory(config.out);
    const char* ext = format == OdeFormat::text ? ".txt" : ".json";
    for (std::size_t i = 0; i < systems.size(); ++i) {
      write_file(dir / ("component_" + std::to_string(i) + ext),
                 emit(systems[i], format, coefficients));
    }
    out << "systems=" << systems.size() << "\n";
    return kExitOk;
  });
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<std::int64_t> radii = parse_radii(config.radii);
    if (!config.shape.empty() && config.shape != "square" && config.shape != "circle") {
      throw UsageError("--shape must be square or circle");
    }
    const SolutionSet set = load_or_enumerate(config);
    const bool square = config.shape.empty() || config.shape == "square";
    const bool circle = config.shape.empty() || config.shape == "circle";
    std::vector<std::int64_t> sq;
    std::vector<std::int64_t> ci;
    if (square) sq = partial_domain_counts(set.triads, radii, DomainShape::square);
    if (circle) ci = partial_domain_counts(set.triads, radii, DomainShape::circle);

    std::string csv = "radius";
    if (square) csv += ",square_count";
    if (circle) csv += ",circle_count";
    csv += "\n";
    for (std::size_t i = 0; i < radii.size(); ++i) {
      csv += std::to_string(radii[i]);
      if (square) csv += "," + std::to_string(sq[i]);
      if (circle) csv += "," + std::to_string(ci[i]);
      csv += "\n";
    }
    if (config.out.empty()) {
      out << csv;
    } else {
      write_file(config.out, csv);
    }
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and analysis of resonant wave triads", "triadic"};
  app.set_version_flag("--version", std::string("triadic ") + kVersion);
  app.require_subcommand(1);

  RunConfig config;
  auto add_dispersion = [&](CLI::App* sub) {
    sub->add_option("--dispersion", config.dispersion, "sphere | channel | spec:<file>")
        ->capture_default_str();
  };
  auto add_domain = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--domain", config.domain, "Spectral domain D (0 < m, n <= D)");
    if (required) opt->required();
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", config.jobs, "Worker threads for enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "Solution file (JSON or CSV) instead of enumerating");
  };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate every triad in the domain");
  add_dispersion(enumerate_cmd);
  add_domain(enumerate_cmd, true);
  add_jobs(enumerate_cmd);
  enumerate_cmd->add_option("--out", config.out, "Solution file to write");
  enumerate_cmd->add_option("--format", config.format, "json | csv");

  auto* check_cmd = app.add_subcommand("check", "Compare the fast enumerator with brute force");
  add_dispersion(check_cmd);
  add_domain(check_cmd, true);
  add_jobs(check_cmd);
  check_cmd->add_option("--oracle-cap", config.oracle_cap, "Largest domain the oracle accepts")
      ->capture_default_str();

  auto* topology_cmd = app.add_subcommand("topology", "Cluster census, multiplicities, graphs");
  add_dispersion(topology_cmd);
  add_domain(topology_cmd, false);
  add_jobs(topology_cmd);
  add_input(topology_cmd);
  topology_cmd->add_option("--out", config.out, "Report directory");
  topology_cmd->add_option("--format", config.format, "json | dot");
  topology_cmd
      ->add_option("--multiplicity", config.multiplicity,
                   "slot (per triad position) | vector (per distinct vector)")
      ->capture_default_str();

  auto* ode_cmd = app.add_subcommand("ode", "Amplitude equations per cluster");
  add_dispersion(ode_cmd);
  add_domain(ode_cmd, false);
  add_jobs(ode_cmd);
  add_input(ode_cmd);
  ode_cmd->add_option("--out", config.out, "Directory for one file per cluster");
  ode_cmd->add_option("--format", config.format, "text | json");
  ode_cmd->add_option("--coefficients", config.coefficients,
                      "CSV rows triad,slot,value substituted for the symbolic coefficients");

  auto* stats_cmd = app.add_subcommand("stats", "Triad counts in partial domains");
  add_dispersion(stats_cmd);
  add_domain(stats_cmd, false);
  add_jobs(stats_cmd);
  add_input(stats_cmd);
  stats_cmd->add_option("--out", config.out, "CSV file (stdout if omitted)");
  stats_cmd->add_option("--radii", config.radii, "r1,r2,... or start:stop:step")->required();
  stats_cmd->add_option("--shape", config.shape, "square | circle (both if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (enumerate_cmd->parsed()) return cmd_enumerate(config, out, err);
  if (check_cmd->parsed()) return cmd_check(config, out, err);
  if (topology_cmd->parsed()) return cmd_topology(config, out, err);
  if (ode_cmd->parsed()) return cmd_ode(config, out, err);
  if (stats_cmd->parsed()) return cmd_stats(config, out, err);
  return kExitUsage;
}

}  // namespace triadic::cli

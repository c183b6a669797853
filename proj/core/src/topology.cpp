#include "triadic/topology.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "triadic/canonical.hpp"

namespace triadic {

namespace {

std::string vector_text(const WaveVector& k) {
  return std::to_string(k.m) + "," + std::to_string(k.n);
}

// Distinct vectors of a triad; only differs from vectors() for degenerate
// triads with k1 == k2.
std::vector<WaveVector> distinct_vectors(const Triad& t) {
  std::vector<WaveVector> v{t.k1, t.k2, t.k3};
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SolutionGraphs build_graphs(std::span<const Triad> triads) {
  SolutionGraphs out;
  std::map<WaveVector, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < triads.size(); ++i) {
    for (const auto& k : distinct_vectors(triads[i])) members[k].push_back(i);
  }

  auto& vg = out.vectors;
  vg.nodes.reserve(members.size());
  for (const auto& [k, _] : members) vg.nodes.push_back(k);
  auto node_of = [&](const WaveVector& k) {
    return static_cast<std::size_t>(std::lower_bound(vg.nodes.begin(), vg.nodes.end(), k) -
                                    vg.nodes.begin());
  };
  for (const auto& t : triads) {
    const auto ks = distinct_vectors(t);
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (std::size_t j = i + 1; j < ks.size(); ++j) {
        vg.edges.emplace_back(std::minmax(node_of(ks[i]), node_of(ks[j])));
      }
    }
  }
  std::sort(vg.edges.begin(), vg.edges.end());
  vg.edges.erase(std::unique(vg.edges.begin(), vg.edges.end()), vg.edges.end());

  auto& tg = out.triads;
  tg.node_count = triads.size();
  tg.adjacency.assign(triads.size(), {});
  std::map<std::pair<std::size_t, std::size_t>, std::vector<WaveVector>> shared;
  for (const auto& [k, list] : members) {
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) shared[{list[i], list[j]}].push_back(k);
    }
  }
  tg.edges.reserve(shared.size());
  for (auto& [ab, vs] : shared) {
    std::sort(vs.begin(), vs.end());
    tg.edges.push_back({ab.first, ab.second, vs});
    tg.adjacency[ab.first].push_back(ab.second);
    tg.adjacency[ab.second].push_back(ab.first);
  }
  for (auto& adj : tg.adjacency) std::sort(adj.begin(), adj.end());

  std::vector<bool> seen(triads.size(), false);
  for (std::size_t start = 0; start < triads.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (std::size_t w : tg.adjacency[v]) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    tg.components.push_back(std::move(component));
  }
  return out;
}

std::string ComponentClass::label() const {
  switch (kind) {
    case ClusterKind::isolated:
      return "isolated";
    case ClusterKind::butterfly:
      return "butterfly";
    case ClusterKind::chain:
      return "chain" + std::to_string(triad_count());
    case ClusterKind::star:
      return "star" + std::to_string(triad_count());
    case ClusterKind::complex:
      break;
  }
  return "complex";
}

std::vector<ComponentClass> classify_components(const TriadGraph& graph) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> shared_count;
  for (const auto& e : graph.edges) shared_count[{e.a, e.b}] = e.shared.size();

  std::vector<ComponentClass> out;
  out.reserve(graph.components.size());
  for (const auto& component : graph.components) {
    const std::size_t size = component.size();
    SmallGraph g(size);
    bool double_link = false;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t w : graph.adjacency[component[i]]) {
        if (w <= component[i]) continue;
        const auto j = static_cast<std::size_t>(
            std::lower_bound(component.begin(), component.end(), w) - component.begin());
        g.add_edge(i, j);
        if (shared_count.at({component[i], w}) > 1) double_link = true;
      }
    }

    std::size_t max_degree = 0;
    for (std::size_t v = 0; v < size; ++v) max_degree = std::max(max_degree, g.neighbours(v).size());
    const bool tree = g.edge_count() + 1 == size;

    ClusterKind kind = ClusterKind::complex;
    if (size == 1) {
      kind = ClusterKind::isolated;
    } else if (size == 2) {
      kind = double_link ? ClusterKind::complex : ClusterKind::butterfly;
    } else if (tree && max_degree <= 2) {
      kind = ClusterKind::chain;
    } else if (size >= 4 && tree && max_degree == size - 1) {
      kind = ClusterKind::star;
    }
    out.push_back({component, kind, canonical_certificate(g), double_link});
  }
  return out;
}

std::map<std::string, std::size_t> census_totals(std::span<const ComponentClass> classes) {
  std::map<std::string, std::size_t> totals;
  for (const auto& c : classes) ++totals[c.label()];
  return totals;
}

std::map<WaveVector, std::int64_t> multiplicities(std::span<const Triad> triads) {
  std::map<WaveVector, std::int64_t> out;
  for (const auto& t : triads) {
    for (const auto& k : distinct_vectors(t)) ++out[k];
  }
  return out;
}

std::map<VectorSlot, std::int64_t> slot_multiplicities(std::span<const Triad> triads) {
  std::map<VectorSlot, std::int64_t> out;
  for (const auto& t : triads) {
    const Triad c = t.canonical();
    ++out[{c.k1, 1}];
    ++out[{c.k2, 2}];
    ++out[{c.k3, 3}];
  }
  return out;
}

std::map<std::int64_t, std::int64_t> multiplicity_histogram(std::span<const Triad> triads,
                                                            MultiplicityMode mode) {
  std::map<std::int64_t, std::int64_t> out;
  if (mode == MultiplicityMode::per_slot) {
    for (const auto& [k, count] : slot_multiplicities(triads)) ++out[count];
  } else {
    for (const auto& [k, count] : multiplicities(triads)) ++out[count];
  }
  return out;
}

MultiplicityMode parse_multiplicity_mode(std::string_view name) {
  if (name == "slot") return MultiplicityMode::per_slot;
  if (name == "vector") return MultiplicityMode::per_vector;
  throw std::invalid_argument("multiplicity mode must be slot or vector, not " + std::string(name));
}

std::vector<std::int64_t> partial_domain_counts(std::span<const Triad> triads,
                                                std::span<const std::int64_t> radii,
                                                DomainShape shape) {
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 0) throw std::invalid_argument("radii must be non-negative");
    if (i > 0 && radii[i] < radii[i - 1]) throw std::invalid_argument("radii must be ascending");
  }
  // Smallest admissible radius (square) or squared radius (circle) per triad.
  std::vector<__int128> threshold;
  threshold.reserve(triads.size());
  for (const auto& t : triads) {
    __int128 need = 0;
    for (const auto& k : t.vectors()) {
      const __int128 v = shape == DomainShape::square
                             ? static_cast<__int128>(std::max(k.m, k.n))
                             : static_cast<__int128>(k.m) * k.m + static_cast<__int128>(k.n) * k.n;
      need = std::max(need, v);
    }
    threshold.push_back(need);
  }
  std::sort(threshold.begin(), threshold.end());

  std::vector<std::int64_t> out;
  out.reserve(radii.size());
  for (const std::int64_t s : radii) {
    const __int128 limit =
        shape == DomainShape::square ? static_cast<__int128>(s) : static_cast<__int128>(s) * s;
    out.push_back(static_cast<std::int64_t>(
        std::upper_bound(threshold.begin(), threshold.end(), limit) - threshold.begin()));
  }
  return out;
}

std::string vector_graph_dot(const VectorGraph& graph) {
  std::string out = "graph vectors {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"" + vector_text(graph.nodes[i]) + "\"];\n";
  }
  for (const auto& [a, b] : graph.edges) {
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string triad_graph_dot(const TriadGraph& graph) {
  std::string out = "graph triads {\n";
  for (std::size_t i = 0; i < graph.node_count; ++i) {
    out += "  T" + std::to_string(i) + " [label=\"T" + std::to_string(i) + "\"];\n";
  }
  for (const auto& e : graph.edges) {
    std::string label;
    for (const auto& k : e.shared) {
      if (!label.empty()) label += ' ';
      label += "(" + vector_text(k) + ")";
    }
    out += "  T" + std::to_string(e.a) + " -- T" + std::to_string(e.b) + " [label=\"" + label +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string histogram_csv(const std::map<std::int64_t, std::int64_t>& histogram) {
  std::string out = "multiplicity,count\n";
  for (const auto& [mult, count] : histogram) {
    out += std::to_string(mult) + "," + std::to_string(count) + "\n";
  }
  return out;
}

}  // namespace triadic

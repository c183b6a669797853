#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triadic/dispersion.hpp"
#include "triadic/enumerator.hpp"

namespace triadic {

/// Lattice picture: one node per wave vector, an edge between any two vectors
/// of the same triad.
struct VectorGraph {
  std::vector<WaveVector> nodes;                           // sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (a < b), sorted, unique
};

struct TriadEdge {
  std::size_t a = 0;  // a < b
  std::size_t b = 0;
  std::vector<WaveVector> shared;  // sorted
};

/// Triads as nodes, adjacent when they share at least one wave vector.
struct TriadGraph {
  std::size_t node_count = 0;
  std::vector<TriadEdge> edges;  // sorted by (a, b)
  std::vector<std::vector<std::size_t>> adjacency;
  /// Connected components as sorted triad indices, ordered by smallest index.
  std::vector<std::vector<std::size_t>> components;
};

struct SolutionGraphs {
  VectorGraph vectors;
  TriadGraph triads;
};

SolutionGraphs build_graphs(std::span<const Triad> triads);
inline SolutionGraphs build_graphs(const SolutionSet& set) { return build_graphs(set.triads); }

enum class ClusterKind { isolated, butterfly, chain, star, complex };

struct ComponentClass {
  std::vector<std::size_t> triads;  // indices into the solution set
  ClusterKind kind = ClusterKind::isolated;
  std::string certificate;
  /// Some pair of triads in the component shares two wave vectors.
  bool has_double_link = false;

  std::size_t triad_count() const noexcept { return triads.size(); }
  /// "isolated", "butterfly", "chain<L>", "star<L>" or "complex".
  std::string label() const;
};

/// Labels every component of the triad graph and computes its certificate.
/// Output order matches TriadGraph::components.
std::vector<ComponentClass> classify_components(const TriadGraph& graph);

/// Number of components per label, e.g. {"butterfly": 2, "chain3": 1, ...}.
std::map<std::string, std::size_t> census_totals(std::span<const ComponentClass> classes);

/// A wave vector in a fixed position of its triad: slot 1 and 2 are the
/// summands (slot 1 has the smaller n), slot 3 is the sum.
struct VectorSlot {
  WaveVector vector;
  int slot = 1;

  friend auto operator<=>(const VectorSlot&, const VectorSlot&) = default;
};

/// How occurrences are grouped when counting multiplicities.
///  per_slot:   a vector counts separately in each triad position; counts sum
///              to 3 * triads. This is the convention of the published tables.
///  per_vector: the number of distinct triads containing the vector.
enum class MultiplicityMode { per_slot, per_vector };

/// Per wave vector, the number of triads it belongs to.
std::map<WaveVector, std::int64_t> multiplicities(std::span<const Triad> triads);

/// Per (wave vector, slot), the number of triads holding it there.
std::map<VectorSlot, std::int64_t> slot_multiplicities(std::span<const Triad> triads);

/// multiplicity -> number of counted keys with that multiplicity.
std::map<std::int64_t, std::int64_t> multiplicity_histogram(
    std::span<const Triad> triads, MultiplicityMode mode = MultiplicityMode::per_slot);
inline std::map<std::int64_t, std::int64_t> multiplicity_histogram(
    const SolutionSet& set, MultiplicityMode mode = MultiplicityMode::per_slot) {
  return multiplicity_histogram(set.triads, mode);
}

/// "slot" | "vector".
MultiplicityMode parse_multiplicity_mode(std::string_view name);

enum class DomainShape { square, circle };

/// For each radius s, the number of triads whose three vectors all satisfy
/// m, n <= s (square) or m^2 + n^2 <= s^2 (circle). Radii must be
/// non-negative and ascending; throws std::invalid_argument otherwise.
std::vector<std::int64_t> partial_domain_counts(std::span<const Triad> triads,
                                                std::span<const std::int64_t> radii,
                                                DomainShape shape);

std::string vector_graph_dot(const VectorGraph& graph);
std::string triad_graph_dot(const TriadGraph& graph);
std::string histogram_csv(const std::map<std::int64_t, std::int64_t>& histogram);

}  // namespace triadic

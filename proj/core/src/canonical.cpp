#include "triadic/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <tuple>

namespace triadic {

void SmallGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b || adjacency_[a][b]) return;
  adjacency_[a][b] = adjacency_[b][a] = true;
  neighbours_[a].push_back(b);
  neighbours_[b].push_back(a);
  ++edges_;
}

SmallGraph SmallGraph::permuted(const std::vector<std::size_t>& perm) const {
  SmallGraph out(size());
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b : neighbours_[a]) {
      if (a < b) out.add_edge(perm[a], perm[b]);
    }
  }
  return out;
}

namespace {

// Transposing u and v is an automorphism iff they agree on every third vertex.
bool twins(const SmallGraph& g, std::size_t u, std::size_t v) {
  if (g.neighbours(u).size() != g.neighbours(v).size()) return false;
  for (std::size_t w : g.neighbours(u)) {
    if (w != v && !g.adjacent(v, w)) return false;
  }
  return true;
}

// Twin classes: vertices with equal open or equal closed neighbourhoods. The
// union of the two relations is again an equivalence.
std::vector<std::size_t> twin_classes(const SmallGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (bool closed : {false, true}) {
    std::map<std::vector<std::size_t>, std::size_t> seen;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> key = g.neighbours(v);
      if (closed) key.push_back(v);
      std::sort(key.begin(), key.end());
      const auto [it, inserted] = seen.emplace(std::move(key), v);
      if (!inserted) parent[find(v)] = find(it->second);
    }
  }
  for (std::size_t v = 0; v < n; ++v) parent[v] = find(v);
  return parent;
}

class ExhaustiveSearch {
public:
  explicit ExhaustiveSearch(const SmallGraph& g) : g_(g), order_(g.size()), used_(g.size()) {}

  std::string run() {
    dfs(0);
    return best_;
  }

private:
  void dfs(std::size_t pos) {
    const std::size_t n = g_.size();
    if (pos == n) {
      if (!have_best_ || current_ > best_) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n; ++v) {
      if (used_[v]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](std::size_t t) { return twins(g_, t, v); })) {
        continue;
      }
      tried.push_back(v);
      const std::size_t mark = current_.size();
      for (std::size_t i = 0; i < pos; ++i) current_ += g_.adjacent(order_[i], v) ? '1' : '0';
      if (have_best_ && std::string_view(current_) < std::string_view(best_).substr(0, current_.size())) {
        current_.resize(mark);
        continue;
      }
      order_[pos] = v;
      used_[v] = true;
      dfs(pos + 1);
      used_[v] = false;
      current_.resize(mark);
    }
  }

  const SmallGraph& g_;
  std::vector<std::size_t> order_;
  std::vector<bool> used_;
  std::string current_;
  std::string best_;
  bool have_best_ = false;
};

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

// Ordered partition of the vertex set. lab lists vertices cell by cell; a
// cell is identified by its first position.
struct Partition {
  std::vector<std::size_t> lab;
  std::vector<std::size_t> pos;
  std::vector<std::size_t> cell;  // first position of the cell holding v
  std::vector<std::size_t> end;   // end[s]: one past the last position of cell s

  explicit Partition(std::size_t n) : lab(n), pos(n), cell(n, 0), end(n, n) {
    std::iota(lab.begin(), lab.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
  }

  // Moves v in front of its cell and makes it a cell of its own.
  void individualize(std::size_t v) {
    const std::size_t s = cell[v];
    const std::size_t e = end[s];
    std::swap(lab[pos[v]], lab[s]);
    pos[lab[pos[v]]] = pos[v];
    pos[v] = s;
    end[s] = s + 1;
    end[s + 1] = e;
    for (std::size_t i = s + 1; i < e; ++i) cell[lab[i]] = s + 1;
  }
};

// Equitable refinement driven by a queue of splitter cells. Every split is
// decided by neighbour counts and cell positions only, so the result is
// equivariant under relabelling.
class Refiner {
public:
  explicit Refiner(const SmallGraph& g) : g_(g), count_(g.size(), 0), queued_(g.size(), false) {}

  void operator()(Partition& p, std::vector<std::size_t> queue) {
    for (std::size_t s : queue) queued_[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t w = queue[head];
      queued_[w] = false;
      split_by(p, w, queue);
    }
  }

private:
  void split_by(Partition& p, std::size_t w, std::vector<std::size_t>& queue) {
    touched_.clear();
    for (std::size_t i = w; i < p.end[w]; ++i) {
      for (std::size_t u : g_.neighbours(p.lab[i])) {
        if (count_[u]++ == 0) touched_.push_back(u);
      }
    }
    cells_.clear();
    for (std::size_t u : touched_) cells_.push_back(p.cell[u]);
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());

    for (std::size_t x : cells_) {
      const std::size_t e = p.end[x];
      if (e - x == 1) continue;
      auto first = p.lab.begin() + static_cast<std::ptrdiff_t>(x);
      auto last = p.lab.begin() + static_cast<std::ptrdiff_t>(e);
      auto by_count = [&](std::size_t a, std::size_t b) { return count_[a] < count_[b]; };
      const auto [lo, hi] = std::minmax_element(first, last, by_count);
      if (count_[*lo] == count_[*hi]) continue;
      std::sort(first, last, by_count);

      const bool was_queued = queued_[x];
      std::size_t largest = x;
      std::size_t largest_size = 0;
      runs_.clear();
      for (std::size_t r = x; r < e;) {
        std::size_t q = r;
        while (q < e && count_[p.lab[q]] == count_[p.lab[r]]) {
          p.pos[p.lab[q]] = q;
          p.cell[p.lab[q]] = r;
          ++q;
        }
        p.end[r] = q;
        runs_.push_back(r);
        if (q - r > largest_size) {
          largest_size = q - r;
          largest = r;
        }
        r = q;
      }
      for (std::size_t r : runs_) {
        if (queued_[r] || (!was_queued && r == largest)) continue;
        queued_[r] = true;
        queue.push_back(r);
      }
    }
    for (std::size_t u : touched_) count_[u] = 0;
  }

  const SmallGraph& g_;
  std::vector<std::size_t> count_;
  std::vector<bool> queued_;
  std::vector<std::size_t> touched_;
  std::vector<std::size_t> cells_;
  std::vector<std::size_t> runs_;
};

class RefinedSearch {
public:
  explicit RefinedSearch(const SmallGraph& g)
      : g_(g), refine_(g), twin_class_(twin_classes(g)) {}

  EdgeList run() {
    if (g_.size() == 0) return {};
    std::vector<std::size_t> path;
    search(Partition(g_.size()), {0}, path);
    return best_;
  }

private:
  void search(Partition p, std::vector<std::size_t> splitters, std::vector<std::size_t>& path) {
    refine_(p, std::move(splitters));
    const std::size_t n = g_.size();

    std::size_t target = n;
    for (std::size_t s = 0; s < n; s = p.end[s]) {
      if (p.end[s] - s > 1) {
        target = s;
        break;
      }
    }
    if (target == n) {
      leaf(p.pos);
      return;
    }

    std::vector<bool> twin_tried(n, false);
    std::vector<bool> orbit_tried(n, false);
    std::vector<std::size_t> orbit;
    std::size_t orbits_from = 0;  // automorphisms_.size() when `orbit` was built
    for (std::size_t v = 0; v < n; ++v) {
      if (p.cell[v] != target || twin_tried[twin_class_[v]]) continue;
      if (automorphisms_.size() != orbits_from) {
        orbits_from = automorphisms_.size();
        orbit = orbits_fixing(path);
        std::fill(orbit_tried.begin(), orbit_tried.end(), false);
        for (std::size_t u = 0; u < v; ++u) {
          if (p.cell[u] == target && twin_tried[twin_class_[u]]) orbit_tried[orbit[u]] = true;
        }
      }
      if (orbits_from > 0 && orbit_tried[orbit[v]]) continue;
      twin_tried[twin_class_[v]] = true;
      if (orbits_from > 0) orbit_tried[orbit[v]] = true;
      Partition child = p;
      child.individualize(v);
      path.push_back(v);
      search(std::move(child), {target}, path);
      path.pop_back();
    }
  }

  void leaf(const std::vector<std::size_t>& label) {
    EdgeList edges;
    edges.reserve(g_.edge_count());
    for (std::size_t a = 0; a < g_.size(); ++a) {
      for (std::size_t b : g_.neighbours(a)) {
        if (a < b) edges.emplace_back(std::minmax(label[a], label[b]));
      }
    }
    std::sort(edges.begin(), edges.end());
    if (!have_best_ || edges < best_) {
      best_ = std::move(edges);
      best_label_ = label;
      have_best_ = true;
    } else if (edges == best_) {
      // Two leaves with the same relabelled graph expose an automorphism.
      std::vector<std::size_t> inverse(label.size());
      for (std::size_t v = 0; v < label.size(); ++v) inverse[best_label_[v]] = v;
      std::vector<std::size_t> gamma(label.size());
      for (std::size_t v = 0; v < label.size(); ++v) gamma[v] = inverse[label[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  // Orbit representative of every vertex under the group generated by the
  // known automorphisms that fix the current path pointwise.
  std::vector<std::size_t> orbits_fixing(const std::vector<std::size_t>& path) const {
    std::vector<std::size_t> parent(g_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(path.begin(), path.end(),
                                     [&](std::size_t p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < gamma.size(); ++x) parent[find(x)] = find(gamma[x]);
    }
    for (std::size_t x = 0; x < parent.size(); ++x) parent[x] = find(x);
    return parent;
  }

  const SmallGraph& g_;
  Refiner refine_;
  std::vector<std::size_t> twin_class_;
  EdgeList best_;
  std::vector<std::size_t> best_label_;
  bool have_best_ = false;
  std::vector<std::vector<std::size_t>> automorphisms_;
};

std::string hex_bits(const std::string& bits) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    unsigned nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < bits.size() && bits[i + j] == '1') nibble |= 1;
    }
    out += digits[nibble];
  }
  return out;
}

}  // namespace

std::string certificate_exhaustive(const SmallGraph& g) {
  return "X" + std::to_string(g.size()) + ":" + hex_bits(ExhaustiveSearch(g).run());
}

std::string certificate_refined(const SmallGraph& g) {
  std::string out = "R" + std::to_string(g.size()) + ":";
  const EdgeList edges = RefinedSearch(g).run();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return out;
}

std::string canonical_certificate(const SmallGraph& g) {
  return g.size() <= kExhaustiveLimit ? certificate_exhaustive(g) : certificate_refined(g);
}

std::string certificate_hash(std::string_view certificate) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : certificate) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace triadic

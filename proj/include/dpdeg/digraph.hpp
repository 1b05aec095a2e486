#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>

#include "error.hpp"

namespace boost {
enum edge_component_t { edge_component };
BOOST_INSTALL_PROPERTY(edge, component);
}  // namespace boost

namespace dpdeg {

/// An element of N0^2. Ordered componentwise, so `<=` is a partial order.
struct DegreePair {
  int plus = 0;
  int minus = 0;

  friend bool operator==(const DegreePair&, const DegreePair&) = default;
  friend bool operator<=(const DegreePair& a, const DegreePair& b) {
    return a.plus <= b.plus && a.minus <= b.minus;
  }
  friend bool operator>=(const DegreePair& a, const DegreePair& b) { return b <= a; }
  friend DegreePair operator+(DegreePair a, const DegreePair& b) {
    a.plus += b.plus;
    a.minus += b.minus;
    return a;
  }
  friend DegreePair operator-(DegreePair a, const DegreePair& b) {
    a.plus -= b.plus;
    a.minus -= b.minus;
    return a;
  }
  DegreePair& operator+=(const DegreePair& b) {
    plus += b.plus;
    minus += b.minus;
    return *this;
  }
  friend DegreePair operator*(int k, const DegreePair& a) { return {k * a.plus, k * a.minus}; }

  bool is_zero() const { return plus == 0 && minus == 0; }

  friend std::ostream& operator<<(std::ostream& os, const DegreePair& p) {
    return os << '(' << p.plus << ',' << p.minus << ')';
  }
};

using Arc = std::pair<int, int>;

/// Finite simple loopless digraph on vertices 0..n-1. Digons are allowed.
/// Immutable once built.
class Digraph {
public:
  Digraph() = default;
  explicit Digraph(int n) : n_(n), out_(n), in_(n) {}

  /// Validates and deduplicates. Throws LoopArc / VertexOutOfRange.
  static Digraph build(int n, std::span<const Arc> arcs) {
    if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
    Digraph d(n);
    d.arcs_.reserve(arcs.size());
    for (auto [u, v] : arcs) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw Error(ErrorCode::VertexOutOfRange, "arc endpoint outside 0.." + std::to_string(n - 1),
                    {u, v});
      if (u == v) throw Error(ErrorCode::LoopArc, "loop at vertex " + std::to_string(u), {u});
      d.arcs_.emplace_back(u, v);
    }
    std::sort(d.arcs_.begin(), d.arcs_.end());
    d.arcs_.erase(std::unique(d.arcs_.begin(), d.arcs_.end()), d.arcs_.end());
    for (auto [u, v] : d.arcs_) {
      d.out_[u].push_back(v);
      d.in_[v].push_back(u);
    }
    for (auto& l : d.in_) std::sort(l.begin(), l.end());
    return d;
  }
  static Digraph build(int n, std::initializer_list<Arc> arcs) {
    return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
  }

  int order() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }

  bool has_arc(int u, int v) const {
    const auto& o = out_[u];
    return std::binary_search(o.begin(), o.end(), v);
  }
  int a(int u, int v) const { return has_arc(u, v) ? 1 : 0; }

  DegreePair degree(int v) const {
    return {static_cast<int>(out_[v].size()), static_cast<int>(in_[v].size())};
  }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
};

struct DegreeProfile {
  std::vector<DegreePair> degrees;
  DegreePair max;  // Δ
  DegreePair min;  // δ
};

inline DegreeProfile degree_profile(const Digraph& d) {
  DegreeProfile p;
  for (int v = 0; v < d.order(); ++v) p.degrees.push_back(d.degree(v));
  if (d.order() == 0) return p;
  p.max = p.min = p.degrees[0];
  for (const auto& g : p.degrees) {
    p.max.plus = std::max(p.max.plus, g.plus);
    p.max.minus = std::max(p.max.minus, g.minus);
    p.min.plus = std::min(p.min.plus, g.plus);
    p.min.minus = std::min(p.min.minus, g.minus);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Underlying graph helpers

/// Sorted neighbour lists of UG(D).
inline std::vector<std::vector<int>> underlying(const Digraph& d) {
  std::vector<std::vector<int>> g(d.order());
  for (auto [u, v] : d.arcs()) {
    g[u].push_back(v);
    g[v].push_back(u);
  }
  for (auto& l : g) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return g;
}

/// Connected components of UG(D), each sorted, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Digraph& d) {
  auto g = underlying(d);
  std::vector<int> comp(d.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < d.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> c{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int w : g[c[i]])
        if (comp[w] < 0) {
          comp[w] = comp[s];
          c.push_back(w);
        }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

/// The empty digraph counts as connected.
inline bool is_connected(const Digraph& d) { return components(d).size() <= 1; }

/// D[S] with vertices renumbered in the order given by `vs`.
inline Digraph induced(const Digraph& d, std::span<const int> vs) {
  std::vector<int> pos(d.order(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  std::vector<Arc> arcs;
  for (auto [u, v] : d.arcs())
    if (pos[u] >= 0 && pos[v] >= 0) arcs.emplace_back(pos[u], pos[v]);
  return Digraph::build(static_cast<int>(vs.size()), arcs);
}

inline Digraph remove_vertex(const Digraph& d, int x) {
  std::vector<int> keep;
  for (int v = 0; v < d.order(); ++v)
    if (v != x) keep.push_back(v);
  return induced(d, keep);
}

inline Digraph remove_arc(const Digraph& d, Arc a) {
  std::vector<Arc> arcs;
  for (const auto& b : d.arcs())
    if (b != a) arcs.push_back(b);
  return Digraph::build(d.order(), arcs);
}

/// Disjoint union; vertices of `b` are shifted by |a|.
inline Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  std::vector<Arc> arcs = a.arcs();
  for (auto [u, v] : b.arcs()) arcs.emplace_back(u + a.order(), v + a.order());
  return Digraph::build(a.order() + b.order(), arcs);
}

inline Digraph relabel(const Digraph& d, std::span<const int> perm) {
  std::vector<Arc> arcs;
  for (auto [u, v] : d.arcs()) arcs.emplace_back(perm[u], perm[v]);
  return Digraph::build(d.order(), arcs);
}

inline bool is_bidirected(const Digraph& d) {
  for (auto [u, v] : d.arcs())
    if (!d.has_arc(v, u)) return false;
  return true;
}

inline bool is_acyclic(const Digraph& d) {
  std::vector<int> indeg(d.order());
  for (int v = 0; v < d.order(); ++v) indeg[v] = static_cast<int>(d.in(v).size());
  std::vector<int> stack;
  for (int v = 0; v < d.order(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : d.out(v))
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return seen == d.order();
}

// ---------------------------------------------------------------------------
// Blocks

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // each sorted; list sorted
  std::vector<int> cut_vertices;         // sorted
};

inline BlockDecomposition blocks(const Digraph& d) {
  using namespace boost;
  using UG = adjacency_list<vecS, vecS, undirectedS, no_property,
                            property<edge_component_t, std::size_t>>;
  auto adj = underlying(d);
  UG g(d.order());
  for (int u = 0; u < d.order(); ++u)
    for (int v : adj[u])
      if (u < v) add_edge(u, v, g);

  auto comp = get(edge_component, g);
  std::vector<UG::vertex_descriptor> arts;
  std::size_t nc = biconnected_components(g, comp, std::back_inserter(arts)).first;

  BlockDecomposition bd;
  std::vector<std::vector<int>> by_comp(nc);
  for (auto [e, end] = edges(g); e != end; ++e) {
    by_comp[comp[*e]].push_back(static_cast<int>(source(*e, g)));
    by_comp[comp[*e]].push_back(static_cast<int>(target(*e, g)));
  }
  for (auto& b : by_comp) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    bd.blocks.push_back(std::move(b));
  }
  for (int v = 0; v < d.order(); ++v)
    if (adj[v].empty()) bd.blocks.push_back({v});
  std::sort(bd.blocks.begin(), bd.blocks.end());
  for (auto a : arts) bd.cut_vertices.push_back(static_cast<int>(a));
  std::sort(bd.cut_vertices.begin(), bd.cut_vertices.end());
  return bd;
}

/// Connected with no separating vertex (K1 and K2-shaped digraphs count).
inline bool is_block(const Digraph& d) {
  return d.order() >= 1 && is_connected(d) && blocks(d).cut_vertices.empty();
}

/// UG(D) is 2-connected: at least three vertices, connected, no cut vertex.
inline bool is_2connected(const Digraph& d) { return d.order() >= 3 && is_block(d); }

/// UG(D) is a single cycle through all (at least three) vertices.
inline bool is_cycle_graph(const Digraph& d) {
  if (d.order() < 3 || !is_connected(d)) return false;
  auto g = underlying(d);
  for (const auto& l : g)
    if (l.size() != 2) return false;
  return true;
}

/// Walks a cycle graph starting at its smallest vertex, towards the smaller
/// neighbour.
inline std::vector<int> cycle_order(const Digraph& d) {
  auto g = underlying(d);
  std::vector<int> order{0};
  int prev = 0, cur = g[0][0];
  while (cur != 0) {
    order.push_back(cur);
    int nxt = g[cur][0] == prev ? g[cur][1] : g[cur][0];
    prev = cur;
    cur = nxt;
  }
  return order;
}

struct DecompositionCase {
  enum class Kind { Cycle, RemovableVertex, Path } kind;
  int vertex = -1;        // RemovableVertex
  std::vector<int> path;  // Path, in walking order
};

/// Case split of a 2-connected digraph: a directed or bidirected cycle, a
/// vertex whose removal keeps it 2-connected, or an ear of degree-2 vertices.
inline DecompositionCase decompose_2connected(const Digraph& d) {
  if (!is_2connected(d)) throw Error(ErrorCode::Not2Connected, "underlying graph is not 2-connected");
  if (is_cycle_graph(d)) return {DecompositionCase::Kind::Cycle, -1, {}};

  for (int v = 0; v < d.order(); ++v)
    if (is_2connected(remove_vertex(d, v))) return {DecompositionCase::Kind::RemovableVertex, v, {}};

  // Maximal chains of degree-2 vertices between branch vertices; a valid path
  // must be a whole chain, otherwise a pendant vertex would remain.
  auto g = underlying(d);
  std::vector<char> used(d.order(), 0);
  std::optional<std::vector<int>> best;
  for (int s = 0; s < d.order(); ++s) {
    if (g[s].size() != 2 || used[s]) continue;
    std::vector<int> chain{s};
    used[s] = 1;
    for (int side = 0; side < 2; ++side) {
      int prev = s, cur = g[s][side];
      while (g[cur].size() == 2 && !used[cur]) {
        used[cur] = 1;
        if (side == 0)
          chain.insert(chain.begin(), cur);
        else
          chain.push_back(cur);
        int nxt = g[cur][0] == prev ? g[cur][1] : g[cur][0];
        prev = cur;
        cur = nxt;
      }
    }
    if (chain.size() < 2) continue;
    if (chain.back() < chain.front()) std::reverse(chain.begin(), chain.end());
    std::vector<int> rest;
    for (int v = 0; v < d.order(); ++v)
      if (std::find(chain.begin(), chain.end(), v) == chain.end()) rest.push_back(v);
    if (!is_2connected(induced(d, rest))) continue;
    if (!best || chain < *best) best = chain;
  }
  if (!best) throw Error(ErrorCode::InternalInvariant, "no decomposition case applies");
  return {DecompositionCase::Kind::Path, -1, *best};
}

// ---------------------------------------------------------------------------
// Families

struct FamilyTag {
  enum class Kind {
    BidirectedComplete,
    BidirectedCycle,
    DirectedCycle,
    AntidirectedCycle,
    SingleArc,
    Other
  } kind = Kind::Other;
  int n = 0;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;

  std::string str() const {
    switch (kind) {
      case Kind::BidirectedComplete: return "BidirectedComplete(" + std::to_string(n) + ")";
      case Kind::BidirectedCycle: return "BidirectedCycle(" + std::to_string(n) + ")";
      case Kind::DirectedCycle: return "DirectedCycle(" + std::to_string(n) + ")";
      case Kind::AntidirectedCycle: return "AntidirectedCycle(" + std::to_string(n) + ")";
      case Kind::SingleArc: return "SingleArc";
      case Kind::Other: return "Other";
    }
    return "Other";
  }
};

inline bool is_bidirected_complete(const Digraph& d) {
  std::size_t n = d.order();
  return n >= 1 && d.arc_count() == n * (n - 1);
}

inline bool is_bidirected_cycle(const Digraph& d) { return is_bidirected(d) && is_cycle_graph(d); }

inline bool is_directed_cycle(const Digraph& d) {
  if (d.order() < 2 || !is_connected(d)) return false;
  for (int v = 0; v < d.order(); ++v)
    if (d.degree(v) != DegreePair{1, 1}) return false;
  return true;
}

inline bool is_antidirected_cycle(const Digraph& d) {
  if (d.order() < 4 || !is_cycle_graph(d) || d.arc_count() != static_cast<std::size_t>(d.order()))
    return false;
  for (int v = 0; v < d.order(); ++v) {
    auto g = d.degree(v);
    if (g.plus != 0 && g.minus != 0) return false;
  }
  return true;
}

inline FamilyTag classify(const Digraph& d) {
  using K = FamilyTag::Kind;
  if (!is_connected(d) || d.order() == 0) throw Error(ErrorCode::NotConnected, "classify needs a connected digraph");
  int n = d.order();
  if (is_bidirected_complete(d)) return {K::BidirectedComplete, n};
  if (is_bidirected_cycle(d)) return {K::BidirectedCycle, n};
  if (is_directed_cycle(d)) return {K::DirectedCycle, n};
  if (is_antidirected_cycle(d)) return {K::AntidirectedCycle, n};
  if (n == 2 && d.arc_count() == 1) return {K::SingleArc, 2};
  return {K::Other, n};
}

struct EulerInfo {
  bool eulerian = false;
  std::optional<int> diregular_r;
};

inline EulerInfo eulerian_diregular(const Digraph& d) {
  EulerInfo e{true, std::nullopt};
  for (int v = 0; v < d.order(); ++v) {
    auto g = d.degree(v);
    if (g.plus != g.minus) return {false, std::nullopt};
  }
  if (d.order() == 0) return {true, 0};
  int r = d.degree(0).plus;
  for (int v = 1; v < d.order(); ++v)
    if (d.degree(v).plus != r) return e;
  e.diregular_r = r;
  return e;
}

/// D±(G) for an undirected graph given as an edge list.
inline Digraph bidirect(int n, std::span<const std::pair<int, int>> edges) {
  std::vector<Arc> arcs;
  for (auto [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop edge at " + std::to_string(u), {u});
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return Digraph::build(n, arcs);
}

// Standard members used throughout the tests and the CLI.

inline Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
  return Digraph::build(n, arcs);
}

inline Digraph bidirected_complete(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) arcs.emplace_back(i, j);
  return Digraph::build(n, arcs);
}

inline Digraph bidirected_cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return bidirect(n, e);
}

inline Digraph bidirected_path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return bidirect(n, e);
}

/// Even-indexed vertices are sources, odd-indexed ones sinks.
inline Digraph antidirected_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; i += 2) {
    arcs.emplace_back(i, (i + 1) % n);
    arcs.emplace_back(i, (i + n - 1) % n);
  }
  return Digraph::build(n, arcs);
}

inline Digraph transitive_tournament(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.emplace_back(i, j);
  return Digraph::build(n, arcs);
}

inline Digraph single_arc() { return Digraph::build(2, {{0, 1}}); }

}  // namespace dpdeg

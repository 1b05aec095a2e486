#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "property.hpp"

namespace dpdeg {

enum class Variant { Plain, List, Dp };

inline Variant parse_variant(const std::string& s) {
  if (s == "plain") return Variant::Plain;
  if (s == "list") return Variant::List;
  if (s == "dp") return Variant::Dp;
  throw Error(ErrorCode::BadParameter, "unknown variant '" + s + "'");
}

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::Plain: return "plain";
    case Variant::List: return "list";
    case Variant::Dp: return "dp";
  }
  return "?";
}

struct ChiCaps {
  int plain_n = 8;
  int list_n = 5;
  int dp_n = 4;
  int dp_k = 3;
};

namespace detail {

inline void require_reliable(const DigraphProperty& p) {
  if (!p.reliable()) throw Error(ErrorCode::PropertyNotEligible, p.name() + " is not reliable");
}

[[noreturn]] inline void cap_exceeded(const std::string& what) { throw Error(ErrorCode::ScaleCapExceeded, what); }

/// member[S] = P contains D[S], for every vertex subset S.
inline std::vector<char> subset_membership(const Digraph& d, const DigraphProperty& p) {
  int n = d.order();
  std::vector<char> member(std::size_t{1} << n, 0);
  for (std::uint32_t s = 0; s < member.size(); ++s) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1) vs.push_back(v);
    member[s] = p.contains(induced(d, vs));
  }
  return member;
}

/// Fewest P-members partitioning V(D).
inline int min_partition(const Digraph& d, const std::vector<char>& member) {
  int n = d.order();
  std::uint32_t full = (1u << n) - 1;
  std::vector<int> best(full + 1, n + 1);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t low = s & (~s + 1);
    std::uint32_t rest = s ^ low;
    // subsets of s containing the lowest vertex
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      std::uint32_t cls = t | low;
      if (member[cls]) best[s] = std::min(best[s], 1 + best[s ^ cls]);
      if (t == 0) break;
    }
  }
  return best[full];
}

/// A k-assignment up to renaming colors is a multiset of incidence patterns
/// (the vertex set whose list holds a given color) covering each vertex k
/// times. Patterns are enumerated grouped by their smallest vertex.
class ListSearch {
public:
  ListSearch(int n, int k, const std::vector<char>& member) : n_(n), k_(k), member_(member), need_(n, k) {}

  /// True iff every k-assignment admits a coloring with P-member classes.
  bool all_colorable() { return enumerate(0, 0); }

private:
  bool enumerate(int v0, std::uint32_t last) {
    while (v0 < n_ && need_[v0] == 0) {
      ++v0;
      last = 0;
    }
    if (v0 == n_) return colorable();
    std::uint32_t avail = 0;
    for (int v = v0; v < n_; ++v)
      if (need_[v] > 0) avail |= 1u << v;
    // patterns within avail that contain v0, in increasing order, >= last
    std::uint32_t rest = avail & ~(1u << v0);
    std::vector<std::uint32_t> opts;
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      std::uint32_t s = t | (1u << v0);
      if (s >= last) opts.push_back(s);
      if (t == 0) break;
    }
    std::sort(opts.begin(), opts.end());
    for (std::uint32_t s : opts) {
      patterns_.push_back(s);
      for (int v = 0; v < n_; ++v)
        if (s >> v & 1) --need_[v];
      bool ok = enumerate(v0, s);
      for (int v = 0; v < n_; ++v)
        if (s >> v & 1) ++need_[v];
      patterns_.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  bool colorable() {
    classes_.assign(patterns_.size(), 0);
    return assign(0);
  }

  bool assign(int v) {
    if (v == n_) return true;
    for (std::size_t c = 0; c < patterns_.size(); ++c) {
      if (!(patterns_[c] >> v & 1)) continue;
      // an empty class is interchangeable with earlier empty ones of the same pattern
      if (classes_[c] == 0) {
        bool dup = false;
        for (std::size_t e = 0; e < c && !dup; ++e) dup = classes_[e] == 0 && patterns_[e] == patterns_[c];
        if (dup) continue;
      }
      std::uint32_t next = classes_[c] | (1u << v);
      if (!member_[next]) continue;
      std::uint32_t old = classes_[c];
      classes_[c] = next;
      if (assign(v + 1)) return true;
      classes_[c] = old;
    }
    return false;
  }

  int n_, k_;
  const std::vector<char>& member_;
  std::vector<int> need_;
  std::vector<std::uint32_t> patterns_;
  std::vector<std::uint32_t> classes_;
};

/// Enumerates k-uniform covers of D. With `saturated`, every matching is
/// perfect; otherwise matchings may be partial. One arc per spanning-tree
/// edge of UG(D) is normalised (fibre permutations make it an identity, or
/// a partial identity), the other arcs range over all matchings.
class CoverSearch {
public:
  using Matching = std::vector<int>;  // m[i] = partner in the head fibre of color i, or -1

  CoverSearch(const Digraph& d, int k, bool saturated) : d_(d), k_(k) {
    int n = d.order();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    std::vector<char> tree(d.arc_count(), 0);
    for (int r = 0; r < n; ++r) {
      if (seen[r]) continue;
      seen[r] = 1;
      stack.push_back(r);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < d.arc_count(); ++i) {
          auto [a, b] = d.arcs()[i];
          int w = a == u ? b : b == u ? a : -1;
          if (w < 0 || seen[w]) continue;
          seen[w] = 1;
          tree[i] = 1;
          stack.push_back(w);
        }
      }
    }
    std::vector<Matching> all = saturated ? permutations(k) : partial_matchings(k);
    std::vector<Matching> normal;
    for (const auto& m : all) {
      bool id = true;
      for (int i = 0; i < k; ++i) id = id && (m[i] == i || m[i] == -1);
      if (id) normal.push_back(m);
    }
    for (std::size_t i = 0; i < d.arc_count(); ++i) {
      order_.push_back(static_cast<int>(i));
      options_.push_back(tree[i] ? normal : all);
    }
    // normalised arcs first: they have the fewest options
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return options_[a].size() < options_[b].size(); });
  }

  const Digraph& base() const { return d_; }
  int k() const { return k_; }
  const std::vector<int>& arc_order() const { return order_; }
  const std::vector<Matching>& options(int arc) const { return options_[arc]; }

  /// The cover with fibre v = {v*k, ..., v*k+k-1} and the given matchings.
  Cover build(const std::vector<const Matching*>& chosen) const {
    int n = d_.order();
    std::vector<std::vector<int>> fib(n);
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < k_; ++i) fib[v].push_back(v * k_ + i);
    std::vector<Arc> harcs;
    for (std::size_t a = 0; a < d_.arc_count(); ++a) {
      auto [u, v] = d_.arcs()[a];
      for (int i = 0; i < k_; ++i)
        if ((*chosen[a])[i] >= 0) harcs.emplace_back(u * k_ + i, v * k_ + (*chosen[a])[i]);
    }
    return Cover::build(d_, std::move(fib), harcs);
  }

private:
  static std::vector<Matching> permutations(int k) {
    Matching m(k);
    for (int i = 0; i < k; ++i) m[i] = i;
    std::vector<Matching> out;
    do out.push_back(m);
    while (std::next_permutation(m.begin(), m.end()));
    return out;
  }

  static std::vector<Matching> partial_matchings(int k) {
    std::vector<Matching> out;
    Matching m(k, -1);
    std::vector<char> used(k, 0);
    std::function<void(int)> rec = [&](int i) {
      if (i == k) {
        out.push_back(m);
        return;
      }
      m[i] = -1;
      rec(i + 1);
      for (int j = 0; j < k; ++j)
        if (!used[j]) {
          used[j] = 1;
          m[i] = j;
          rec(i + 1);
          used[j] = 0;
          m[i] = -1;
        }
    };
    rec(0);
    return out;
  }

  const Digraph& d_;
  int k_;
  std::vector<int> order_;
  std::vector<std::vector<Matching>> options_;
};

/// member[mask] = P contains the spanning subdigraph of D on the arcs in mask.
inline std::vector<char> arc_membership(const Digraph& d, const DigraphProperty& p, int drop = -1) {
  std::size_t m = d.arc_count();
  std::vector<char> member(std::size_t{1} << m, 0);
  std::vector<int> keep;
  for (int v = 0; v < d.order(); ++v)
    if (v != drop) keep.push_back(v);
  std::vector<int> pos(d.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<int>(i);
  for (std::uint32_t s = 0; s < member.size(); ++s) {
    bool touches = false;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1) {
        auto [u, v] = d.arcs()[i];
        if (u == drop || v == drop) touches = true;
        arcs.emplace_back(pos[u], pos[v]);
      }
    member[s] = !touches && p.contains(Digraph::build(static_cast<int>(keep.size()), arcs));
  }
  return member;
}

/// Depth-first walk over the covers of a CoverSearch. A transversal of a
/// k-uniform cover is a map V -> [0,k); H[T] is the spanning subdigraph of D
/// on the arcs whose matching sends t(u) to t(v). `visit` sees the arc mask
/// of every transversal and returns false to stop. With `monotone` (for
/// monotone P), a subtree is skipped when some transversal stays a member
/// whatever the remaining arcs do, and visited early when no transversal is
/// a member any more.
class CoverWalk {
public:
  using Visit = std::function<bool(const std::vector<std::uint32_t>& masks,
                                   const std::vector<const CoverSearch::Matching*>& chosen)>;

  CoverWalk(const CoverSearch& s, const std::vector<char>& member, bool monotone)
      : s_(s), member_(member), monotone_(monotone) {
    int n = s.base().order(), count = 1;
    for (int i = 0; i < n; ++i) count *= s.k();
    digits_.assign(count, std::vector<int>(n));
    for (int t = 0; t < count; ++t)
      for (int v = 0, r = t; v < n; ++v, r /= s.k()) digits_[t][v] = r % s.k();
    chosen_.assign(s.base().arc_count(), nullptr);
  }

  /// Returns false if `visit` stopped the walk.
  bool run(const Visit& visit) {
    std::vector<std::uint32_t> masks(digits_.size(), 0);
    std::uint32_t rest = static_cast<std::uint32_t>((std::uint64_t{1} << s_.base().arc_count()) - 1);
    return step(0, masks, rest, visit);
  }

private:
  bool step(std::size_t depth, const std::vector<std::uint32_t>& masks, std::uint32_t rest, const Visit& visit) {
    const auto& order = s_.arc_order();
    if (monotone_) {
      bool alive = false;
      for (auto m : masks) {
        if (member_[m | rest]) return true;
        alive = alive || member_[m];
      }
      if (!alive) return visit(masks, chosen_);
    }
    if (depth == order.size()) return visit(masks, chosen_);
    int a = order[depth];
    auto [u, v] = s_.base().arcs()[a];
    std::uint32_t bit = 1u << a;
    std::vector<std::uint32_t> next(masks.size());
    for (const auto& m : s_.options(a)) {
      for (std::size_t t = 0; t < masks.size(); ++t)
        next[t] = m[digits_[t][u]] == digits_[t][v] ? masks[t] | bit : masks[t];
      chosen_[a] = &m;
      if (!step(depth + 1, next, rest & ~bit, visit)) return false;
    }
    return true;
  }

  const CoverSearch& s_;
  const std::vector<char>& member_;
  bool monotone_;
  std::vector<std::vector<int>> digits_;
  std::vector<const CoverSearch::Matching*> chosen_;
};

}  // namespace detail

/// Decides whether the parameter of D is at most k.
inline bool chi_at_most(const Digraph& d, const DigraphProperty& p, Variant variant, int k, const ChiCaps& caps = {}) {
  detail::require_reliable(p);
  int n = d.order();
  if (k < 0) return false;
  if (n == 0) return true;
  if (k == 0) return false;
  if (k >= n) return true;  // one color per vertex
  int cap = variant == Variant::Plain ? caps.plain_n : variant == Variant::List ? caps.list_n : caps.dp_n;
  if (n > cap) detail::cap_exceeded(std::string(to_string(variant)) + " needs |D| <= " + std::to_string(cap));
  auto member = detail::subset_membership(d, p);
  int plain = detail::min_partition(d, member);
  if (plain > k) return false;
  if (variant == Variant::Plain) return true;
  if (variant == Variant::List) return detail::ListSearch(n, k, member).all_colorable();

  if (k > caps.dp_k) detail::cap_exceeded("dp needs k <= " + std::to_string(caps.dp_k));
  bool monotone = p.flags().monotone;
  detail::CoverSearch search(d, k, monotone);
  auto amember = detail::arc_membership(d, p);
  detail::CoverWalk walk(search, amember, monotone);
  return walk.run([&](const auto& masks, const auto&) {
    for (auto m : masks)
      if (amember[m]) return true;
    return false;
  });
}

/// Exact value by scanning k upwards; every digraph has value at most |D|.
inline int chi(const Digraph& d, const DigraphProperty& p, Variant variant, const ChiCaps& caps = {}) {
  int n = d.order();
  for (int k = 0; k < n; ++k)
    if (chi_at_most(d, p, variant, k, caps)) return k;
  return n;
}

struct Criticality {
  bool critical = false;
  int value = 0;
};

/// Critical iff every vertex-deleted subdigraph has a smaller value; by
/// induced monotonicity that covers all proper induced subdigraphs.
inline Criticality is_critical(const Digraph& d, const DigraphProperty& p, Variant variant, const ChiCaps& caps = {}) {
  Criticality c;
  c.value = chi(d, p, variant, caps);
  if (d.order() == 0) return c;
  c.critical = true;
  for (int v = 0; v < d.order() && c.critical; ++v) c.critical = chi(remove_vertex(d, v), p, variant, caps) < c.value;
  return c;
}

struct InducedSubdigraph {
  Digraph digraph;
  std::vector<int> vertices;
};

/// A minimum-order induced subdigraph with the same value (ties broken by
/// the smallest vertex set in colex order).
inline InducedSubdigraph critical_subdigraph(const Digraph& d, const DigraphProperty& p, Variant variant,
                                             const ChiCaps& caps = {}) {
  int n = d.order();
  if (n > 16) detail::cap_exceeded("critical_subdigraph needs |D| <= 16");
  int target = chi(d, p, variant, caps);
  for (int size = 0; size <= n; ++size)
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (std::popcount(s) != size) continue;
      std::vector<int> vs;
      for (int v = 0; v < n; ++v)
        if (s >> v & 1) vs.push_back(v);
      auto sub = induced(d, vs);
      if (chi(sub, p, variant, caps) == target) return {sub, vs};
    }
  return {d, {}};
}

// ---------------------------------------------------------------------------
// Critical covers

namespace detail {

/// Does H[T] lie in P for some transversal T of (X,H)/(D - skip)?
inline bool has_transversal(const Cover& c, const DigraphProperty& p, int skip = -1) {
  std::vector<int> verts;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (v != skip) verts.push_back(v);
  std::vector<int> t;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == verts.size()) {
      std::vector<int> sorted = t;
      std::sort(sorted.begin(), sorted.end());
      return p.contains(induced(c.h(), sorted));
    }
    for (int x : c.fibre(verts[i])) {
      t.push_back(x);
      if (rec(i + 1)) return true;
      t.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace detail

/// No P-transversal, but one avoiding each single vertex.
inline bool is_critical_cover(const Cover& c, const DigraphProperty& p) {
  if (detail::has_transversal(c, p)) return false;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (!detail::has_transversal(c, p, v)) return false;
  return true;
}

/// Calls `visit` on every critical k-uniform cover found by the cover
/// search (saturated covers for monotone P, all covers otherwise), until it
/// returns false.
inline void for_each_critical_cover(const Digraph& d, const DigraphProperty& p, int k,
                                    const std::function<bool(const Cover&)>& visit, const ChiCaps& caps = {}) {
  detail::require_reliable(p);
  if (d.order() > caps.dp_n || k > caps.dp_k)
    detail::cap_exceeded("critical cover search needs |D| <= " + std::to_string(caps.dp_n) +
                         " and k <= " + std::to_string(caps.dp_k));
  if (d.order() == 0 || k < 1) return;
  bool monotone = p.flags().monotone;
  detail::CoverSearch search(d, k, monotone);
  auto amember = detail::arc_membership(d, p);
  std::vector<std::vector<char>> dropped;
  for (int v = 0; v < d.order(); ++v) dropped.push_back(detail::arc_membership(d, p, v));
  std::vector<std::uint32_t> touching(d.order(), 0);
  for (std::size_t i = 0; i < d.arc_count(); ++i) {
    auto [u, w] = d.arcs()[i];
    touching[u] |= 1u << i;
    touching[w] |= 1u << i;
  }
  detail::CoverWalk walk(search, amember, false);
  walk.run([&](const std::vector<std::uint32_t>& masks, const auto& chosen) {
    for (auto m : masks)
      if (amember[m]) return true;
    // a (P,v)-transversal is the restriction of a full one with v dropped
    for (int v = 0; v < d.order(); ++v) {
      bool ok = false;
      for (std::size_t t = 0; t < masks.size() && !ok; ++t) ok = dropped[v][masks[t] & ~touching[v]];
      if (!ok) return true;
    }
    return visit(search.build(chosen));
  });
}

inline std::optional<Cover> find_critical_cover(const Digraph& d, const DigraphProperty& p, int k,
                                                const ChiCaps& caps = {}) {
  std::optional<Cover> found;
  for_each_critical_cover(
      d, p, k,
      [&](const Cover& c) {
        found = c;
        return false;
      },
      caps);
  return found;
}

// ---------------------------------------------------------------------------
// Low vertices and dibricks

enum class DibrickClause { BidirectedComplete, OddBidirectedCycle, MemberLowDegree, CrEulerian };

inline const char* to_string(DibrickClause c) {
  switch (c) {
    case DibrickClause::BidirectedComplete: return "bidirected-complete";
    case DibrickClause::OddBidirectedCycle: return "odd-bidirected-cycle";
    case DibrickClause::MemberLowDegree: return "member-low-degree";
    case DibrickClause::CrEulerian: return "cr-eulerian";
  }
  return "?";
}

inline std::optional<DibrickClause> is_dibrick(const Digraph& b, const DigraphProperty& p) {
  if (b.order() == 0 || !is_connected(b)) throw Error(ErrorCode::NotConnected, "dibricks are connected");
  if (is_bidirected_complete(b)) return DibrickClause::BidirectedComplete;
  if (is_bidirected_cycle(b) && b.order() % 2 == 1) return DibrickClause::OddBidirectedCycle;
  DegreePair dp = d_of(p);
  auto prof = degree_profile(b);
  if (p.contains(b) && prof.max <= dp) return DibrickClause::MemberLowDegree;
  if (dp.plus == dp.minus && in_CR(p, b)) {
    bool reg = true;
    for (const auto& g : prof.degrees) reg = reg && g == dp;
    if (reg) return DibrickClause::CrEulerian;
  }
  return std::nullopt;
}

struct LowBlock {
  std::vector<int> vertices;  // ids in D
  FamilyTag tag;
  std::optional<DibrickClause> dibrick;
};

struct CriticalCoverReport {
  std::vector<char> low;
  std::vector<int> low_vertices;
  Digraph low_subdigraph;  // D[low_vertices], renumbered in that order
  std::vector<LowBlock> blocks;
};

inline CriticalCoverReport low_vertices(const Digraph& d, const Cover& c, const DigraphProperty& p) {
  if (!(c.base() == d)) throw Error(ErrorCode::BadParameter, "cover is not a cover of this digraph");
  DegreePair dp = d_of(p);
  CriticalCoverReport r;
  r.low.assign(d.order(), 0);
  for (int v = 0; v < d.order(); ++v)
    if (d.degree(v) == static_cast<int>(c.fibre(v).size()) * dp) {
      r.low[v] = 1;
      r.low_vertices.push_back(v);
    }
  r.low_subdigraph = induced(d, r.low_vertices);
  for (const auto& b : blocks(r.low_subdigraph).blocks) {
    LowBlock lb;
    for (int i : b) lb.vertices.push_back(r.low_vertices[i]);
    auto bd = induced(r.low_subdigraph, b);
    lb.tag = classify(bd);
    lb.dibrick = is_dibrick(bd, p);
    r.blocks.push_back(std::move(lb));
  }
  return r;
}

enum class CoverMode { Dp, List };

struct BlockStructureReport {
  CriticalCoverReport report;
  std::vector<LowBlock> violations;
};

/// Every block of the low-vertex subdigraph must be a dibrick, or in dp mode
/// also an even bidirected cycle or an antidirected cycle.
inline BlockStructureReport check_block_structure(const Digraph& d, const Cover& c, const DigraphProperty& p,
                                                  CoverMode mode) {
  detail::require_reliable(p);
  if (!is_critical_cover(c, p)) throw Error(ErrorCode::NotCritical, "cover is not critical");
  if (mode == CoverMode::List && !is_list_associated(c))
    throw Error(ErrorCode::NotListAssociated, "cover is not associated with a list assignment");
  BlockStructureReport out;
  out.report = low_vertices(d, c, p);
  for (const auto& b : out.report.blocks) {
    bool ok = b.dibrick.has_value();
    if (!ok && mode == CoverMode::Dp) {
      auto bd = induced(d, b.vertices);
      ok = (is_bidirected_cycle(bd) && bd.order() % 2 == 0) || is_antidirected_cycle(bd);
    }
    if (!ok) out.violations.push_back(b);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Brooks-type classification

enum class BrooksClause { K1, CrDiregular, Complete, BidirectedCycle };

inline const char* to_string(BrooksClause c) {
  switch (c) {
    case BrooksClause::K1: return "K1";
    case BrooksClause::CrDiregular: return "cr-diregular";
    case BrooksClause::Complete: return "complete";
    case BrooksClause::BidirectedCycle: return "bidirected-cycle";
  }
  return "?";
}

struct BrooksClass {
  int bound = 0;
  std::optional<BrooksClause> exceptional;
  int k = 0;  // Complete: D = D±(K_{kr+1})
  int r = 0;  // d+(P) = d-(P) when an exception applies
};

/// The degree bound max{ceil(Δ+/d+), ceil(Δ-/d-)} and the exceptional clause
/// D matches, if any. Purely structural.
inline BrooksClass brooks_classify(const Digraph& d, const DigraphProperty& p) {
  if (!p.strongly_reliable()) throw Error(ErrorCode::PropertyNotEligible, p.name() + " is not strongly reliable");
  DegreePair dp = d_of(p);
  if (dp.plus < 1 || dp.minus < 1) throw Error(ErrorCode::PropertyNotEligible, "d(P) must be at least (1,1)");
  if (d.order() == 0 || !is_connected(d)) throw Error(ErrorCode::NotConnected, "digraph is not connected");
  auto prof = degree_profile(d);
  auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
  BrooksClass bc;
  bc.bound = std::max(ceil_div(prof.max.plus, dp.plus), ceil_div(prof.max.minus, dp.minus));
  if (d.order() == 1) {
    bc.exceptional = BrooksClause::K1;
    return bc;
  }
  if (dp.plus != dp.minus) return bc;
  int r = dp.plus;
  bc.r = r;
  auto eu = eulerian_diregular(d);
  if (eu.diregular_r == r && in_CR(p, d)) {
    bc.exceptional = BrooksClause::CrDiregular;
    bc.k = 1;
  } else if (is_bidirected_complete(d) && (d.order() - 1) % r == 0) {
    bc.exceptional = BrooksClause::Complete;
    bc.k = (d.order() - 1) / r;
  } else if (r == 1 && is_bidirected_cycle(d)) {
    bc.exceptional = BrooksClause::BidirectedCycle;
    bc.k = 2;
  }
  if (!bc.exceptional) bc.r = 0;
  return bc;
}

}  // namespace dpdeg

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>
#include <vector>

#include "digraph.hpp"

namespace dpdeg {

/// Canonical form of a digraph with at most 8 vertices: degree-pair colour
/// refinement, then exhaustive search over orderings compatible with the
/// refined cells. Exact, so equal codes mean isomorphic digraphs.
struct Canonical {
  std::uint64_t code = 0;
  std::vector<int> order;  // order[i] = original vertex placed at position i
};

namespace detail {

inline std::vector<int> refine_cells(const Digraph& d) {
  int n = d.order();
  std::vector<int> color(n);
  {
    std::vector<std::tuple<int, int, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      int digons = 0;
      for (int w : d.out(v)) digons += d.has_arc(w, v);
      sig[v] = {d.degree(v).plus, d.degree(v).minus, digons};
    }
    auto keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
  }
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> o, i;
      for (int w : d.out(v)) o.push_back(color[w]);
      for (int w : d.in(v)) i.push_back(color[w]);
      std::sort(o.begin(), o.end());
      std::sort(i.begin(), i.end());
      sig[v].push_back(color[v]);
      sig[v].insert(sig[v].end(), o.begin(), o.end());
      sig[v].push_back(-1);
      sig[v].insert(sig[v].end(), i.begin(), i.end());
    }
    auto keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
    int before = *std::max_element(color.begin(), color.end());
    int after = *std::max_element(next.begin(), next.end());
    color = std::move(next);
    if (after == before) break;
  }
  return color;
}

}  // namespace detail

inline Canonical canonical_form(const Digraph& d) {
  int n = d.order();
  if (n > 8) throw Error(ErrorCode::ScaleCapExceeded, "canonical form supports at most 8 vertices");
  Canonical best;
  best.code = static_cast<std::uint64_t>(n) << 56;
  if (n == 0) return best;

  auto color = detail::refine_cells(d);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end)
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  std::uint64_t top = 0;
  bool have = false;
  auto evaluate = [&] {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) code = (code << 1) | static_cast<std::uint64_t>(d.has_arc(order[i], order[j]));
    if (!have || code > top) {
      top = code;
      best.order = order;
      have = true;
    }
  };
  // Odometer over the permutations of every cell.
  for (auto [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);
  for (;;) {
    evaluate();
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == cells.size()) break;
  }
  best.code |= top;
  return best;
}

inline std::uint64_t canonical_code(const Digraph& d) { return canonical_form(d).code; }

inline Digraph canonical_digraph(const Digraph& d) {
  auto c = canonical_form(d);
  std::vector<int> perm(d.order());
  for (int i = 0; i < d.order(); ++i) perm[c.order[i]] = i;
  return relabel(d, perm);
}

/// One representative per isomorphism class of digraphs on n vertices
/// (n <= 5), built by vertex augmentation from the classes on n-1 vertices.
inline const std::vector<Digraph>& all_digraphs(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Digraph>> cache;
  if (n < 0 || n > 5) throw Error(ErrorCode::ScaleCapExceeded, "digraph enumeration supports n <= 5");
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Digraph> reps;
  if (n == 0) {
    reps.push_back(Digraph::build(0, {}));
  } else {
    const auto& prev = all_digraphs(n - 1);
    std::unordered_set<std::uint64_t> seen;
    int m = n - 1;
    for (const auto& p : prev) {
      for (int mask = 0; mask < (1 << (2 * m)); ++mask) {
        std::vector<Arc> arcs = p.arcs();
        for (int v = 0; v < m; ++v) {
          if (mask >> (2 * v) & 1) arcs.emplace_back(m, v);
          if (mask >> (2 * v + 1) & 1) arcs.emplace_back(v, m);
        }
        auto d = Digraph::build(n, arcs);
        auto c = canonical_form(d);
        if (seen.insert(c.code).second) {
          std::vector<int> perm(n);
          for (int i = 0; i < n; ++i) perm[c.order[i]] = i;
          reps.push_back(relabel(d, perm));
        }
      }
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(reps)).first->second;
}

inline std::vector<Digraph> connected_digraphs(int n) {
  std::vector<Digraph> out;
  for (const auto& d : all_digraphs(n))
    if (is_connected(d)) out.push_back(d);
  return out;
}

}  // namespace dpdeg

#pragma once

// Independent reference implementations for tests. They share only the data
// types with the library, never its algorithms.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "dpdeg/dpdeg.hpp"

namespace oracle {

using dpdeg::Arc;
using dpdeg::Configuration;
using dpdeg::Cover;
using dpdeg::DegreePair;
using dpdeg::Digraph;
using dpdeg::VertexFunction;

/// Strict f-degeneracy straight from the definition: every nonempty subset W
/// of `scope` has a vertex whose out- or in-degree inside H[W] is below f.
inline bool strictly_degenerate(const Digraph& h, const std::vector<DegreePair>& f, const std::vector<int>& scope) {
  int s = static_cast<int>(scope.size());
  for (unsigned mask = 1; mask < (1u << s); ++mask) {
    bool escape = false;
    for (int i = 0; i < s && !escape; ++i) {
      if (!(mask >> i & 1)) continue;
      int x = scope[i], out = 0, in = 0;
      for (int j = 0; j < s; ++j) {
        if (!(mask >> j & 1)) continue;
        out += h.has_arc(x, scope[j]);
        in += h.has_arc(scope[j], x);
      }
      escape = out < f[x].plus || in < f[x].minus;
    }
    if (!escape) return false;
  }
  return true;
}

/// Colorability by trying every full transversal.
inline std::optional<std::vector<int>> colorable(const Configuration& k) {
  const auto& c = k.cover();
  int n = c.vertex_count();
  for (int v = 0; v < n; ++v)
    if (c.fibre(v).empty()) return std::nullopt;
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<int> t(n);
    for (int v = 0; v < n; ++v) t[v] = c.fibre(v)[idx[v]];
    if (strictly_degenerate(k.h(), k.f(), t)) return t;
    int v = 0;
    while (v < n && ++idx[v] == static_cast<int>(c.fibre(v).size())) idx[v++] = 0;
    if (v == n) return std::nullopt;
  }
}

/// Checks an elimination order the slow way: each color, when removed, has
/// out- or in-degree below f among the colors not yet removed.
inline bool valid_order(const Digraph& h, const std::vector<DegreePair>& f, const std::vector<int>& order) {
  std::vector<char> alive(h.order(), 0);
  for (int x : order) alive[x] = 1;
  for (int x : order) {
    int out = 0, in = 0;
    for (int y = 0; y < h.order(); ++y) {
      if (!alive[y] || y == x) continue;
      out += h.has_arc(x, y);
      in += h.has_arc(y, x);
    }
    if (!(out < f[x].plus || in < f[x].minus)) return false;
    alive[x] = 0;
  }
  return true;
}

inline bool connected(const Digraph& d) {
  int n = d.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> st{0};
  seen[0] = 1;
  int count = 1;
  while (!st.empty()) {
    int v = st.back();
    st.pop_back();
    for (int w = 0; w < n; ++w)
      if (!seen[w] && (d.has_arc(v, w) || d.has_arc(w, v))) {
        seen[w] = 1;
        ++count;
        st.push_back(w);
      }
  }
  return count == n;
}

/// Random connected digraph: a random tree with random orientations (digons
/// allowed) plus extra arcs with probability p.
inline Digraph random_connected(std::mt19937_64& rng, int n, double p) {
  std::vector<Arc> arcs;
  std::uniform_real_distribution<double> u(0, 1);
  for (int v = 1; v < n; ++v) {
    int w = static_cast<int>(rng() % static_cast<unsigned>(v));
    int o = static_cast<int>(rng() % 3);
    if (o != 1) arcs.emplace_back(v, w);
    if (o != 0) arcs.emplace_back(w, v);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && u(rng) < p && std::find(arcs.begin(), arcs.end(), Arc{a, b}) == arcs.end())
        arcs.emplace_back(a, b);
  return Digraph::build(n, arcs);
}

/// Random cover: fibre sizes in [1, max_fibre], and for every base arc a
/// random matching, perfect with probability `saturate`.
inline Cover random_cover(std::mt19937_64& rng, const Digraph& d, int max_fibre, double saturate) {
  std::vector<std::vector<int>> fib(d.order());
  int next = 0;
  for (auto& xs : fib) {
    int s = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_fibre));
    for (int i = 0; i < s; ++i) xs.push_back(next++);
  }
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Arc> harcs;
  for (auto [a, b] : d.arcs()) {
    auto xa = fib[a], xb = fib[b];
    std::shuffle(xa.begin(), xa.end(), rng);
    std::shuffle(xb.begin(), xb.end(), rng);
    std::size_t m = std::min(xa.size(), xb.size());
    bool full = u(rng) < saturate;
    for (std::size_t i = 0; i < m; ++i)
      if (full || u(rng) < 0.6) harcs.emplace_back(xa[i], xb[i]);
  }
  return Cover::build(d, fib, harcs);
}

/// Random split of `total` into `parts` values, each at most `cap`; nullopt if
/// impossible.
inline std::optional<std::vector<int>> random_split(std::mt19937_64& rng, int total, int parts, int cap) {
  if (total > parts * cap) return std::nullopt;
  std::vector<int> out(parts, 0);
  for (int i = 0; i < total; ++i) {
    int j;
    do j = static_cast<int>(rng() % static_cast<unsigned>(parts));
    while (out[j] == cap);
    ++out[j];
  }
  return out;
}

/// f with every value at most cap. With probability `tight` the fibre sums
/// equal the base degrees exactly; otherwise each value is uniform.
inline std::optional<VertexFunction> random_f(std::mt19937_64& rng, const Cover& c, int cap, double tight) {
  std::uniform_real_distribution<double> u(0, 1);
  VertexFunction f(c.color_count());
  if (u(rng) < tight) {
    for (int v = 0; v < c.vertex_count(); ++v) {
      int s = static_cast<int>(c.fibre(v).size());
      auto d = c.base().degree(v);
      auto p = random_split(rng, d.plus, s, cap);
      auto m = random_split(rng, d.minus, s, cap);
      if (!p || !m) return std::nullopt;
      for (int i = 0; i < s; ++i) f[c.fibre(v)[i]] = {(*p)[i], (*m)[i]};
    }
  } else {
    for (auto& g : f)
      g = {static_cast<int>(rng() % static_cast<unsigned>(cap + 1)), static_cast<int>(rng() % static_cast<unsigned>(cap + 1))};
  }
  return f;
}

inline bool degree_feasible(const Configuration& k) {
  for (int v = 0; v < k.base().order(); ++v) {
    DegreePair s;
    for (int x : k.cover().fibre(v)) s += k.f(x);
    auto d = k.base().degree(v);
    if (s.plus < d.plus || s.minus < d.minus) return false;
  }
  return true;
}

/// A random connected, degree-feasible configuration.
inline Configuration random_configuration(std::mt19937_64& rng, int max_n, int max_fibre, int cap) {
  while (true) {
    int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
    auto d = random_connected(rng, n, 0.15);
    auto c = random_cover(rng, d, max_fibre, 0.7);
    auto f = random_f(rng, c, cap, 0.6);
    if (!f) continue;
    Configuration k(c, *f);
    if (degree_feasible(k)) return k;
  }
}

}  // namespace oracle

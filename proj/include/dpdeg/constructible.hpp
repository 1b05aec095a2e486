#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "certificate.hpp"
#include "config.hpp"

namespace dpdeg {

// ---------------------------------------------------------------------------
// Generators. Colors are laid out fibre by fibre: the colors of vertex v are
// offset(v) .. offset(v)+|X_v|-1.

namespace detail {

inline std::vector<std::vector<int>> consecutive_fibres(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> fib(sizes.size());
  int next = 0;
  for (std::size_t v = 0; v < sizes.size(); ++v)
    for (int i = 0; i < sizes[v]; ++i) fib[v].push_back(next++);
  return fib;
}

inline std::vector<int> identity(int r) {
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline void check_permutation(const std::vector<int>& p, int r) {
  auto q = p;
  std::sort(q.begin(), q.end());
  if (q != identity(r)) throw Error(ErrorCode::BadParameter, "not a permutation of 0.." + std::to_string(r - 1));
}

}  // namespace detail

/// M-configuration on a block D. chosen[v] indexes the T-color inside X_v;
/// `extra` are further H-arcs (global color ids) among the other colors.
inline Configuration gen_m(const Digraph& d, const std::vector<int>& fibre_sizes, const std::vector<int>& chosen,
                           const std::vector<Arc>& extra = {}) {
  if (!is_block(d)) throw Error(ErrorCode::NotABlock, "M-configurations need a block");
  if (static_cast<int>(fibre_sizes.size()) != d.order() || static_cast<int>(chosen.size()) != d.order())
    throw Error(ErrorCode::BadParameter, "one fibre size and one chosen index per vertex");
  for (int v = 0; v < d.order(); ++v)
    if (fibre_sizes[v] < 1 || chosen[v] < 0 || chosen[v] >= fibre_sizes[v])
      throw Error(ErrorCode::SaturationImpossible, "no chosen color in fibre", {v});
  auto fib = detail::consecutive_fibres(fibre_sizes);
  std::vector<int> t(d.order());
  for (int v = 0; v < d.order(); ++v) t[v] = fib[v][chosen[v]];
  std::vector<Arc> harcs = extra;
  for (auto [u, v] : d.arcs()) harcs.emplace_back(t[u], t[v]);
  auto cover = Cover::build(d, fib, harcs);
  VertexFunction f(cover.color_count());
  for (int v = 0; v < d.order(); ++v) f[t[v]] = d.degree(v);
  return Configuration(std::move(cover), std::move(f));
}

inline Configuration gen_m(const Digraph& d) {
  return gen_m(d, std::vector<int>(d.order(), 1), std::vector<int>(d.order(), 0));
}

/// K-configuration on D±(K_n) with r colors per fibre. Layer i uses color
/// perms[v][i] of X_v; an empty perms means identity everywhere.
inline Configuration gen_k(int n, const std::vector<int>& parts, int r,
                           const std::vector<std::vector<int>>& perms = {}) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "K-configurations need n >= 2");
  int p = static_cast<int>(parts.size());
  if (p < 1) throw Error(ErrorCode::BadParameter, "need at least one part");
  for (int x : parts)
    if (x < 1) throw Error(ErrorCode::BadParameter, "parts must be positive");
  if (std::accumulate(parts.begin(), parts.end(), 0) != n - 1)
    throw Error(ErrorCode::PartsSumMismatch, "parts must sum to n-1");
  if (r < p) throw Error(ErrorCode::BadParameter, "r must be at least the number of parts");
  std::vector<std::vector<int>> perm(n, detail::identity(r));
  if (!perms.empty()) {
    if (static_cast<int>(perms.size()) != n) throw Error(ErrorCode::BadParameter, "one permutation per vertex");
    for (int v = 0; v < n; ++v) {
      detail::check_permutation(perms[v], r);
      perm[v] = perms[v];
    }
  }
  auto d = bidirected_complete(n);
  auto fib = detail::consecutive_fibres(std::vector<int>(n, r));
  auto color = [&](int v, int i) { return fib[v][perm[v][i]]; };
  std::vector<Arc> harcs;
  for (auto [u, v] : d.arcs())
    for (int i = 0; i < p; ++i) harcs.emplace_back(color(u, i), color(v, i));
  auto cover = Cover::build(d, fib, harcs);
  VertexFunction f(cover.color_count());
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < p; ++i) f[color(v, i)] = {parts[i], parts[i]};
  return Configuration(std::move(cover), std::move(f));
}

enum class Parity { Odd, Even };

/// C-configuration on D±(C_n). Odd: two disjoint saturated layers. Even: the
/// layers run straight along the path 0..n-1 and cross on the closing digon,
/// giving one D±(C_2n). With twist, the two colors of every odd-indexed fibre
/// swap roles.
inline Configuration gen_c(int n, Parity parity, bool twist = false) {
  if (parity == Parity::Odd && (n < 5 || n % 2 == 0))
    throw Error(ErrorCode::BadParity, "odd C-configurations need odd n >= 5", {n});
  if (parity == Parity::Even && (n < 4 || n % 2 != 0))
    throw Error(ErrorCode::BadParity, "even C-configurations need even n >= 4", {n});
  auto d = bidirected_cycle(n);
  auto fib = detail::consecutive_fibres(std::vector<int>(n, 2));
  auto color = [&](int v, int i) { return fib[v][(twist && v % 2 == 1) ? 1 - i : i]; };
  std::vector<Arc> harcs;
  for (int v = 0; v < n; ++v) {
    int w = (v + 1) % n;
    bool cross = parity == Parity::Even && w == 0;
    for (int i = 0; i < 2; ++i) {
      int x = color(v, i), y = color(w, cross ? 1 - i : i);
      harcs.emplace_back(x, y);
      harcs.emplace_back(y, x);
    }
  }
  auto cover = Cover::build(d, fib, harcs);
  return Configuration(std::move(cover), VertexFunction(2 * n, DegreePair{1, 1}));
}

/// A-configuration on the antidirected cycle with even-indexed sources.
inline Configuration gen_a(int n, bool twist = false) {
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::BadOrder, "A-configurations need even n >= 4", {n});
  auto d = antidirected_cycle(n);
  auto fib = detail::consecutive_fibres(std::vector<int>(n, 2));
  auto color = [&](int v, int i) { return fib[v][(twist && v % 4 >= 2) ? 1 - i : i]; };
  std::vector<Arc> harcs;
  for (auto [u, v] : d.arcs()) {
    bool cross = (u == 0 && v == n - 1);
    for (int i = 0; i < 2; ++i) harcs.emplace_back(color(u, i), color(v, cross ? 1 - i : i));
  }
  auto cover = Cover::build(d, fib, harcs);
  VertexFunction f(2 * n);
  for (int v = 0; v < n; ++v)
    for (int x : fib[v]) f[x] = v % 2 == 0 ? DegreePair{1, 0} : DegreePair{0, 1};
  return Configuration(std::move(cover), std::move(f));
}

/// Glues v1 of K1 to v2 of K2. The result keeps K1's vertices and colors and
/// appends the rest of K2; pi[i] is the index in X_{v2} of the partner of
/// the i-th color of X_{v1} (empty = identity).
inline Configuration merge(const Configuration& k1, int v1, const Configuration& k2, int v2,
                           std::vector<int> pi = {}) {
  const auto& c1 = k1.cover();
  const auto& c2 = k2.cover();
  if (v1 < 0 || v1 >= c1.vertex_count() || v2 < 0 || v2 >= c2.vertex_count())
    throw Error(ErrorCode::VertexOutOfRange, "merge vertex out of range");
  int r = static_cast<int>(c1.fibre(v1).size());
  if (static_cast<int>(c2.fibre(v2).size()) != r)
    throw Error(ErrorCode::FibreSizeMismatch, "hinge fibres differ in size",
                {r, static_cast<int>(c2.fibre(v2).size())});
  if (pi.empty()) pi = detail::identity(r);
  detail::check_permutation(pi, r);

  int n1 = c1.vertex_count(), m1 = c1.color_count();
  std::vector<int> vmap(c2.vertex_count());
  int next = n1;
  for (int w = 0; w < c2.vertex_count(); ++w) vmap[w] = w == v2 ? v1 : next++;
  std::vector<int> cmap(c2.color_count(), -1);
  for (int i = 0; i < r; ++i) cmap[c2.fibre(v2)[pi[i]]] = c1.fibre(v1)[i];
  int nextc = m1;
  for (int y = 0; y < c2.color_count(); ++y)
    if (cmap[y] < 0) cmap[y] = nextc++;

  std::vector<Arc> arcs = c1.base().arcs();
  for (auto [a, b] : c2.base().arcs()) arcs.emplace_back(vmap[a], vmap[b]);
  auto d = Digraph::build(next, arcs);
  auto fib = c1.fibres();
  fib.resize(next);
  for (int w = 0; w < c2.vertex_count(); ++w)
    if (w != v2)
      for (int y : c2.fibre(w)) fib[vmap[w]].push_back(cmap[y]);
  std::vector<Arc> harcs = c1.h().arcs();
  for (auto [x, y] : c2.h().arcs()) harcs.emplace_back(cmap[x], cmap[y]);
  auto cover = Cover::build(std::move(d), std::move(fib), harcs);
  VertexFunction f(nextc);
  for (int x = 0; x < m1; ++x) f[x] = k1.f(x);
  for (int y = 0; y < c2.color_count(); ++y) f[cmap[y]] += k2.f(y);
  return Configuration(std::move(cover), std::move(f));
}

/// Adds the H-arc x_u -> x_v between two (0,0) colors.
inline Configuration augment_zero_arc(const Configuration& k, int xu, int xv) {
  const auto& c = k.cover();
  if (xu < 0 || xv < 0 || xu >= c.color_count() || xv >= c.color_count())
    throw Error(ErrorCode::UnknownColor, "no such color", {xu, xv});
  if (!k.f(xu).is_zero() || !k.f(xv).is_zero()) throw Error(ErrorCode::SupportNotZero, "colors must have f = (0,0)", {xu, xv});
  int u = c.owner(xu), v = c.owner(xv);
  if (u == v || !c.base().has_arc(u, v)) throw Error(ErrorCode::MatchingViolation, "no base arc", {u, v});
  if (c.out_partner(xu, v) || c.in_partner(xv, u)) throw Error(ErrorCode::MatchingViolation, "matching already used", {u, v});
  auto arcs = c.h().arcs();
  arcs.emplace_back(xu, xv);
  auto cover = Cover::build(c.base(), c.fibres(), arcs);
  return Configuration(std::move(cover), k.f());
}

/// Adds an isolated (0,0) color to X_v; its id is the old color count.
inline Configuration augment_zero_vertex(const Configuration& k, int v) {
  const auto& c = k.cover();
  if (v < 0 || v >= c.vertex_count()) throw Error(ErrorCode::VertexOutOfRange, "no such vertex", {v});
  auto fib = c.fibres();
  fib[v].push_back(c.color_count());
  auto cover = Cover::build(c.base(), std::move(fib), c.h().arcs());
  auto f = k.f();
  f.push_back({0, 0});
  return Configuration(std::move(cover), std::move(f));
}

// ---------------------------------------------------------------------------
// Family matching on blocks. Everything is phrased on the support sp(f);
// (0,0) colors are unconstrained by the family definitions.

namespace detail {

inline std::vector<int> labels_of(const Cover& c, std::vector<int> xs) {
  for (int& x : xs) x = c.color_label(x);
  std::sort(xs.begin(), xs.end());
  return xs;
}

/// sp(f) split per fibre, or none if some fibre's support size is not `per`.
inline std::optional<std::vector<std::vector<int>>> support_by_fibre(const Configuration& k, int per) {
  std::vector<std::vector<int>> s(k.base().order());
  for (int v = 0; v < k.base().order(); ++v) {
    for (int x : k.cover().fibre(v))
      if (!k.f(x).is_zero()) s[v].push_back(x);
    if (static_cast<int>(s[v].size()) != per) return std::nullopt;
  }
  return s;
}

/// Weak components of H[sp(f)] as local color lists.
inline std::vector<std::vector<int>> support_components(const Configuration& k) {
  std::vector<int> sp;
  for (int x = 0; x < k.cover().color_count(); ++x)
    if (!k.f(x).is_zero()) sp.push_back(x);
  auto sub = induced(k.h(), sp);
  std::vector<std::vector<int>> out;
  for (auto& comp : components(sub)) {
    for (int& i : comp) i = sp[i];
    out.push_back(std::move(comp));
  }
  return out;
}

/// One color per fibre and every base arc realised inside the layer.
inline bool saturated_layer(const Configuration& k, const std::vector<int>& layer) {
  const auto& c = k.cover();
  if (static_cast<int>(layer.size()) != c.vertex_count()) return false;
  std::vector<int> at(c.vertex_count(), -1);
  for (int x : layer) {
    if (at[c.owner(x)] >= 0) return false;
    at[c.owner(x)] = x;
  }
  for (auto [u, v] : c.base().arcs())
    if (!k.h().has_arc(at[u], at[v])) return false;
  return true;
}

inline bool is_bidirected_cycle_on(const Digraph& h, const std::vector<int>& xs) {
  auto sub = induced(h, xs);
  return is_bidirected(sub) && is_cycle_graph(sub);
}

inline bool is_antidirected_cycle_on(const Digraph& h, const std::vector<int>& xs) {
  auto sub = induced(h, xs);
  return is_antidirected_cycle(sub);
}

/// Two disjoint transversals covering `s`: the smaller color of each fibre
/// and the larger one.
inline std::vector<std::vector<int>> min_max_layers(const Cover& c, const std::vector<std::vector<int>>& s) {
  std::vector<int> a, b;
  for (const auto& p : s) {
    a.push_back(std::min(p[0], p[1]));
    b.push_back(std::max(p[0], p[1]));
  }
  return {labels_of(c, a), labels_of(c, b)};
}

}  // namespace detail

inline std::optional<Certificate> match_m(const Configuration& k) {
  const auto& d = k.base();
  const auto& c = k.cover();
  if (!is_block(d)) return std::nullopt;
  for (int v = 0; v < d.order(); ++v)
    if (c.fibre(v).empty()) return std::nullopt;
  Certificate cert;
  cert.kind = Certificate::Kind::M;
  if (d.order() == 1) {
    for (int x : c.fibre(0))
      if (!k.f(x).is_zero()) return std::nullopt;
    cert.layers.push_back({c.color_label(c.fibre(0)[0])});
    return cert;
  }
  auto s = detail::support_by_fibre(k, 1);
  if (!s) return std::nullopt;
  std::vector<int> t;
  for (int v = 0; v < d.order(); ++v) {
    int x = (*s)[v][0];
    if (k.f(x) != d.degree(v)) return std::nullopt;
    t.push_back(x);
  }
  if (!detail::saturated_layer(k, t)) return std::nullopt;
  cert.layers.push_back(detail::labels_of(c, t));
  return cert;
}

inline std::optional<Certificate> match_k(const Configuration& k) {
  const auto& d = k.base();
  int n = d.order();
  if (n < 2 || !is_bidirected_complete(d)) return std::nullopt;
  auto comps = detail::support_components(k);
  std::vector<std::pair<std::vector<int>, int>> layers;  // (labels, part)
  int total = 0;
  for (const auto& comp : comps) {
    if (!detail::saturated_layer(k, comp)) return std::nullopt;
    DegreePair g = k.f(comp[0]);
    if (g.plus != g.minus || g.plus < 1) return std::nullopt;
    for (int x : comp)
      if (k.f(x) != g) return std::nullopt;
    total += g.plus;
    layers.emplace_back(detail::labels_of(k.cover(), comp), g.plus);
  }
  if (layers.empty() || total != n - 1) return std::nullopt;
  std::sort(layers.begin(), layers.end());
  Certificate cert;
  cert.kind = Certificate::Kind::K;
  cert.n = n;
  for (auto& [l, p] : layers) {
    cert.layers.push_back(l);
    cert.parts.push_back(p);
  }
  return cert;
}

inline std::optional<Certificate> match_odd_c(const Configuration& k) {
  const auto& d = k.base();
  int n = d.order();
  if (n < 5 || n % 2 == 0 || !is_bidirected_cycle(d)) return std::nullopt;
  if (!detail::support_by_fibre(k, 2)) return std::nullopt;
  for (int x = 0; x < k.cover().color_count(); ++x)
    if (!k.f(x).is_zero() && k.f(x) != DegreePair{1, 1}) return std::nullopt;
  auto comps = detail::support_components(k);
  if (comps.size() != 2) return std::nullopt;
  for (const auto& comp : comps)
    if (!detail::saturated_layer(k, comp)) return std::nullopt;
  Certificate cert;
  cert.kind = Certificate::Kind::OddC;
  cert.n = n;
  cert.layers = {detail::labels_of(k.cover(), comps[0]), detail::labels_of(k.cover(), comps[1])};
  std::sort(cert.layers.begin(), cert.layers.end());
  return cert;
}

inline std::optional<Certificate> match_even_c(const Configuration& k) {
  const auto& d = k.base();
  int n = d.order();
  if (n < 4 || n % 2 != 0 || !is_bidirected_cycle(d)) return std::nullopt;
  auto s = detail::support_by_fibre(k, 2);
  if (!s) return std::nullopt;
  std::vector<int> sp;
  for (const auto& p : *s)
    for (int x : p) {
      if (k.f(x) != DegreePair{1, 1}) return std::nullopt;
      sp.push_back(x);
    }
  std::sort(sp.begin(), sp.end());
  if (!detail::is_bidirected_cycle_on(k.h(), sp)) return std::nullopt;
  Certificate cert;
  cert.kind = Certificate::Kind::EvenC;
  cert.n = n;
  cert.layers = detail::min_max_layers(k.cover(), *s);
  return cert;
}

inline std::optional<Certificate> match_a(const Configuration& k) {
  const auto& d = k.base();
  int n = d.order();
  if (!is_antidirected_cycle(d)) return std::nullopt;
  auto s = detail::support_by_fibre(k, 2);
  if (!s) return std::nullopt;
  std::vector<int> sp;
  for (int v = 0; v < n; ++v) {
    DegreePair want = d.degree(v).plus > 0 ? DegreePair{1, 0} : DegreePair{0, 1};
    for (int x : (*s)[v]) {
      if (k.f(x) != want) return std::nullopt;
      sp.push_back(x);
    }
  }
  std::sort(sp.begin(), sp.end());
  if (!detail::is_antidirected_cycle_on(k.h(), sp)) return std::nullopt;
  Certificate cert;
  cert.kind = Certificate::Kind::A;
  cert.n = n;
  cert.layers = detail::min_max_layers(k.cover(), *s);
  return cert;
}

/// Leaf families in priority order M > K > OddC > EvenC > A.
inline std::optional<Certificate> match_block_family(const Configuration& k) {
  if (auto c = match_m(k)) return c;
  if (auto c = match_k(k)) return c;
  if (auto c = match_odd_c(k)) return c;
  if (auto c = match_even_c(k)) return c;
  if (auto c = match_a(k)) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cut-vertex split shared by the recognizer and the solver.

struct HingeSplit {
  int vstar = -1;                  // local id
  std::vector<int> side1, side2;   // local vertex ids, both containing vstar
  std::vector<int> t;              // local colors: partial transversal on D - vstar
  std::vector<int> hinge;          // X_vstar
  std::vector<DegreePair> f1;      // per hinge color: d_{H[T1 + x]}(x)
  std::vector<DegreePair> full;    // per hinge color: d_{H[T + x]}(x)
};

/// Splits at the cut vertex v: the first side is v plus the component of
/// D - v holding the smallest vertex. T colors each component of D - v by
/// greedy peeling from a neighbour of v (which has a surplus there).
inline std::optional<HingeSplit> split_at(const Configuration& k, int v) {
  const auto& d = k.base();
  const auto& c = k.cover();
  HingeSplit s;
  s.vstar = v;
  std::vector<int> rest;
  for (int w = 0; w < d.order(); ++w)
    if (w != v) rest.push_back(w);
  auto comps = components(induced(d, rest));
  for (auto& comp : comps)
    for (int& w : comp) w = rest[w];
  std::vector<char> on1(d.order(), 0);
  for (int w : comps[0]) on1[w] = 1;
  for (int w = 0; w < d.order(); ++w) {
    if (w == v || on1[w]) s.side1.push_back(w);
    if (w == v || !on1[w]) s.side2.push_back(w);
  }
  auto cidx = color_index(c);
  for (const auto& comp : comps) {
    auto sub = restrict_config_to_vertices(k, comp);
    int root = -1;
    for (int i = 0; i < static_cast<int>(comp.size()) && root < 0; ++i)
      if (d.has_arc(comp[i], v) || d.has_arc(v, comp[i])) root = i;
    auto t = greedy_surplus_coloring(sub, root);
    if (!t) return std::nullopt;
    for (int x : *t) s.t.push_back(cidx(sub.cover().color_label(x)));
  }
  std::sort(s.t.begin(), s.t.end());
  std::vector<char> inT(c.color_count(), 0), inT1(c.color_count(), 0);
  for (int x : s.t) {
    inT[x] = 1;
    if (on1[c.owner(x)]) inT1[x] = 1;
  }
  s.hinge = c.fibre(v);
  for (int x : s.hinge) {
    s.full.push_back(degree_into(k.h(), inT, x));
    s.f1.push_back(degree_into(k.h(), inT1, x));
  }
  return s;
}

/// The two sides of a split with f replaced on the hinge by f1 and f - f1.
inline std::pair<Configuration, Configuration> split_configurations(const Configuration& k, const HingeSplit& s) {
  VertexFunction fa = k.f(), fb = k.f();
  for (std::size_t i = 0; i < s.hinge.size(); ++i) {
    fa[s.hinge[i]] = s.f1[i];
    fb[s.hinge[i]] = k.f(s.hinge[i]) - s.f1[i];
  }
  return {restrict_config_to_vertices(with_f(k, fa), s.side1), restrict_config_to_vertices(with_f(k, fb), s.side2)};
}

inline Certificate merge_certificate(const Configuration& k, const HingeSplit& s, Certificate a, Certificate b) {
  const auto& c = k.cover();
  Certificate m;
  m.kind = Certificate::Kind::Merge;
  m.v1 = m.v2 = m.vstar = c.vertex_label(s.vstar);
  for (int w : s.side1) m.side.push_back(c.vertex_label(w));
  std::sort(m.side.begin(), m.side.end());
  for (std::size_t i = 0; i < s.hinge.size(); ++i) m.hinge.push_back({c.color_label(s.hinge[i]), s.f1[i]});
  std::sort(m.hinge.begin(), m.hinge.end(), [](const auto& x, const auto& y) { return x.color < y.color; });
  m.children.push_back(std::move(a));
  m.children.push_back(std::move(b));
  return m;
}

namespace detail {

inline std::optional<Certificate> recognize_rec(const Configuration& k) {
  const auto& d = k.base();
  for (int v = 0; v < d.order(); ++v) {
    if (k.cover().fibre(v).empty()) return std::nullopt;
    if (k.fibre_sum(v) != d.degree(v)) return std::nullopt;
  }
  if (d.order() == 1) return match_m(k);
  auto bd = blocks(d);
  if (bd.cut_vertices.empty()) return match_block_family(k);

  auto s = split_at(k, bd.cut_vertices.front());
  if (!s) return std::nullopt;
  for (std::size_t i = 0; i < s->hinge.size(); ++i)
    if (s->full[i] != k.f(s->hinge[i])) return std::nullopt;
  auto [k1, k2] = split_configurations(k, *s);
  auto a = recognize_rec(k1);
  if (!a) return std::nullopt;
  auto b = recognize_rec(k2);
  if (!b) return std::nullopt;
  return merge_certificate(k, *s, std::move(*a), std::move(*b));
}

}  // namespace detail

/// A certificate of constructibility, or none. Cut vertices are split with
/// the hinge function forced by a peeled partial transversal; blocks are
/// matched against the leaf families.
inline std::optional<Certificate> recognize(const Configuration& k) {
  if (k.base().order() == 0 || !is_connected(k.base())) throw Error(ErrorCode::NotConnected, "base digraph is not connected");
  return detail::recognize_rec(k);
}

}  // namespace dpdeg

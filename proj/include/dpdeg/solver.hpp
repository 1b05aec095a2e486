#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constructible.hpp"

namespace dpdeg {

/// A full transversal with an elimination order witnessing that H[T] is
/// strictly f-degenerate. Colors are local ids of the configuration.
struct Coloring {
  std::vector<int> transversal;  // sorted
  std::vector<int> order;
};

struct Verdict {
  enum class Kind { Colored, Constructible };
  Kind kind = Kind::Colored;
  Coloring coloring;        // Colored
  Certificate certificate;  // Constructible

  bool colored() const { return kind == Kind::Colored; }
};

struct BruteForceOptions {
  std::uint64_t budget = 50'000'000;  // search nodes
  // Skip a prefix once H[prefix] is not strictly f-degenerate. Exact, since
  // strict f-degeneracy passes to induced subdigraphs.
  bool prune = false;
};

namespace detail {

struct BruteForce {
  const Configuration& k;
  const BruteForceOptions& opt;
  std::vector<int> verts;
  std::vector<int> chosen;
  std::uint64_t nodes = 0;

  bool run(std::size_t i) {
    if (++nodes > opt.budget)
      throw Error(ErrorCode::BudgetExceeded, "brute force exceeded " + std::to_string(opt.budget) + " nodes");
    if (i == verts.size()) return strictly_f_degenerate(k, chosen).has_value();
    if (opt.prune && i > 0 && !strictly_f_degenerate(k, chosen)) return false;
    for (int x : k.cover().fibre(verts[i])) {
      if (k.f(x).is_zero()) continue;  // never removable
      chosen.push_back(x);
      if (run(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// Exhaustive search for a transversal T with H[T] strictly f-degenerate.
/// Components of D are searched independently; within each, transversals
/// are visited in lexicographic fibre order and the first hit is returned.
inline std::optional<Coloring> brute_force(const Configuration& k, const BruteForceOptions& opt = {}) {
  std::vector<int> all;
  std::uint64_t used = 0;
  for (const auto& comp : components(k.base())) {
    BruteForceOptions o = opt;
    o.budget = opt.budget - std::min(opt.budget, used);
    detail::BruteForce bf{k, o, comp, {}, 0};
    bool ok = bf.run(0);
    used += bf.nodes;
    if (!ok) return std::nullopt;
    all.insert(all.end(), bf.chosen.begin(), bf.chosen.end());
  }
  Coloring c;
  std::sort(all.begin(), all.end());
  c.order = *strictly_f_degenerate(k, all);
  c.transversal = std::move(all);
  return c;
}

struct SolveOptions {
  std::optional<bool> fallback;  // unset: on when |V(H)| <= 24
  std::uint64_t budget = 50'000'000;
};

struct SolveStats {
  std::uint64_t calls = 0;
  std::uint64_t work = 0;  // sum of |D| + |V(H)| + |A(H)| over recursive calls
  bool fallback_used = false;
};

namespace detail {

/// Outcome of the recursive engine. Colorings are in color labels.
struct CoreResult {
  std::optional<std::vector<int>> coloring;
  std::optional<Certificate> certificate;
  bool stuck() const { return !coloring && !certificate; }
};

inline CoreResult colored_labels(const Cover& c, const std::vector<int>& local, std::vector<int> extra = {}) {
  for (int x : local) extra.push_back(c.color_label(x));
  std::sort(extra.begin(), extra.end());
  return {std::move(extra), std::nullopt};
}

[[noreturn]] inline void invariant(const std::string& what) { throw Error(ErrorCode::InternalInvariant, what); }

/// Requires k connected, degree-feasible, with nonempty fibres.
inline CoreResult solve_core(const Configuration& k, SolveStats& st) {
  const auto& d = k.base();
  const auto& c = k.cover();
  ++st.calls;
  st.work += d.order() + k.h().order() + k.h().arc_count();

  auto sur = surplus_vertices(k);
  if (!sur.empty()) {
    auto t = greedy_surplus_coloring(k, sur.front());
    if (!t) invariant("greedy coloring failed on a surplus vertex");
    return colored_labels(c, *t);
  }
  if (d.order() == 1) {
    auto m = match_m(k);
    if (!m) invariant("single vertex without surplus is not an M-configuration");
    return {std::nullopt, std::move(m)};
  }

  auto bd = blocks(d);
  if (!bd.cut_vertices.empty()) {
    auto s = split_at(k, bd.cut_vertices.front());
    if (!s) invariant("no partial transversal on D - v*");
    for (std::size_t i = 0; i < s->hinge.size(); ++i)
      if (!(s->full[i] >= k.f(s->hinge[i]))) {
        auto t = s->t;
        t.push_back(s->hinge[i]);
        return colored_labels(c, t);
      }
    for (std::size_t i = 0; i < s->hinge.size(); ++i)
      if (s->full[i] != k.f(s->hinge[i])) invariant("hinge degrees do not add up");
    std::vector<char> on1(d.order(), 0);
    for (int w : s->side1) on1[w] = 1;
    std::vector<int> t1, t2;
    for (int x : s->t) (on1[c.owner(x)] ? t1 : t2).push_back(c.color_label(x));

    auto [k1, k2] = split_configurations(k, *s);
    auto a = solve_core(k1, st);
    if (a.coloring) {
      a.coloring->insert(a.coloring->end(), t2.begin(), t2.end());
      std::sort(a.coloring->begin(), a.coloring->end());
      return a;
    }
    if (a.stuck()) return a;
    auto b = solve_core(k2, st);
    if (b.coloring) {
      b.coloring->insert(b.coloring->end(), t1.begin(), t1.end());
      std::sort(b.coloring->begin(), b.coloring->end());
      return b;
    }
    if (b.stuck()) return b;
    return {std::nullopt, merge_certificate(k, *s, std::move(*a.certificate), std::move(*b.certificate))};
  }

  // Block with f(X_v) = d(v) everywhere. A single color whose removal
  // leaves a surplus behind gives a coloring at once.
  for (int v = 0; v < d.order(); ++v)
    for (int x : c.fibre(v)) {
      if (k.f(x).is_zero()) continue;
      int one[] = {x};
      auto kr = reduce_unchecked(k, one);
      auto sr = surplus_vertices(kr);
      if (sr.empty()) continue;
      auto t = greedy_surplus_coloring(kr, sr.front());
      if (!t) invariant("greedy coloring failed after a reduction");
      return colored_labels(kr.cover(), *t, {c.color_label(x)});
    }

  // Otherwise (0,0) colors only touch (0,0) colors and can be dropped.
  std::vector<int> nz;
  for (int x = 0; x < c.color_count(); ++x) {
    if (!k.f(x).is_zero()) {
      nz.push_back(x);
      continue;
    }
    for (int y : k.h().out(x))
      if (!k.f(y).is_zero()) invariant("zero color adjacent to the support");
    for (int y : k.h().in(x))
      if (!k.f(y).is_zero()) invariant("zero color adjacent to the support");
  }

  if (auto cert = match_block_family(k)) return {std::nullopt, std::move(cert)};

  // Colorable. The color eliminated last in any witness reduces to a
  // colorable remainder, so trying each single color is complete; failed
  // tries are uncolorable and never branch further.
  auto k0 = restrict_config_to_colors(k, nz);
  const auto& c0 = k0.cover();
  for (int v = 0; v < k0.base().order(); ++v)
    for (int x : c0.fibre(v)) {
      int one[] = {x};
      auto r = solve_core(reduce_unchecked(k0, one), st);
      if (r.coloring) {
        r.coloring->push_back(c0.color_label(x));
        std::sort(r.coloring->begin(), r.coloring->end());
        return r;
      }
    }
  return {};
}

inline void check_solvable(const Configuration& k) {
  const auto& d = k.base();
  if (d.order() == 0 || !is_connected(d)) throw Error(ErrorCode::NotConnected, "base digraph is not connected");
  for (int v = 0; v < d.order(); ++v)
    if (k.cover().fibre(v).empty()) throw Error(ErrorCode::EmptyFibre, "empty fibre", {v});
  if (auto fe = is_degree_feasible(k); !fe.feasible)
    throw Error(ErrorCode::NotDegreeFeasible, "f(X_v) < d(v)", {*fe.violator});
}

}  // namespace detail

/// Colors a connected degree-feasible configuration or certifies that it is
/// constructible.
inline Verdict solve(const Configuration& k, const SolveOptions& opt = {}, SolveStats* stats = nullptr) {
  detail::check_solvable(k);
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  auto r = detail::solve_core(k, st);

  bool fallback = opt.fallback.value_or(k.h().order() <= 24);
  Verdict v;
  if (fallback) {
    auto bf = brute_force(k, {opt.budget, true});
    if (r.stuck()) {
      st.fallback_used = true;
      if (bf) {
        v.coloring = *bf;
        return v;
      }
      auto cert = recognize(k);
      if (!cert) detail::invariant("uncolorable configuration without a certificate");
      v.kind = Verdict::Kind::Constructible;
      v.certificate = std::move(*cert);
      return v;
    }
    if (bf.has_value() != r.coloring.has_value()) detail::invariant("solver and brute force disagree");
  } else if (r.stuck()) {
    detail::invariant("solver could not decide");
  }

  if (r.certificate) {
    v.kind = Verdict::Kind::Constructible;
    v.certificate = std::move(*r.certificate);
    return v;
  }
  auto idx = color_index(k.cover());
  for (int l : *r.coloring) v.coloring.transversal.push_back(idx(l));
  std::sort(v.coloring.transversal.begin(), v.coloring.transversal.end());
  auto order = strictly_f_degenerate(k, v.coloring.transversal);
  if (!order) detail::invariant("solver produced a non-degenerate transversal");
  v.coloring.order = std::move(*order);
  return v;
}

// ---------------------------------------------------------------------------
// Verification

struct Verification {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

namespace detail {

inline Verification reject(std::string why) { return {false, std::move(why)}; }

/// Local ids of a list of color labels, or none if one is unknown.
inline std::optional<std::vector<int>> locals(const LabelIndex& idx, const std::vector<int>& labels) {
  std::vector<int> out;
  for (int l : labels) {
    if (!idx.has(l)) return std::nullopt;
    out.push_back(idx(l));
  }
  return out;
}

/// Disjoint full transversals; returns color -> layer (or -1).
inline std::optional<std::vector<int>> layer_map(const Configuration& k, const std::vector<std::vector<int>>& layers) {
  const auto& c = k.cover();
  std::vector<int> which(c.color_count(), -1);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    if (check_transversal(c, layers[i]).kind != TransversalKind::Full) return std::nullopt;
    for (int x : layers[i]) {
      if (which[x] >= 0) return std::nullopt;
      which[x] = static_cast<int>(i);
    }
  }
  return which;
}

inline Verification verify_leaf(const Configuration& k, const Certificate& cert) {
  using K = Certificate::Kind;
  const auto& d = k.base();
  const auto& c = k.cover();
  int n = d.order();
  auto idx = color_index(c);
  std::vector<std::vector<int>> layers;
  for (const auto& l : cert.layers) {
    auto loc = locals(idx, l);
    if (!loc) return reject("UnknownColor");
    layers.push_back(std::move(*loc));
  }
  auto which = layer_map(k, layers);
  if (!which) return reject("NotATransversal");

  std::vector<DegreePair> want(c.color_count());
  switch (cert.kind) {
    case K::M:
      if (!is_block(d)) return reject("NotABlock");
      if (layers.size() != 1) return reject("BadLayers");
      for (int x : layers[0]) want[x] = d.degree(c.owner(x));
      break;
    case K::K: {
      if (n < 2 || !is_bidirected_complete(d)) return reject("WrongBase");
      if (cert.n != n) return reject("WrongOrder");
      if (cert.parts.empty() || cert.parts.size() != layers.size()) return reject("BadLayers");
      int sum = 0;
      for (int p : cert.parts) {
        if (p < 1) return reject("BadParts");
        sum += p;
      }
      if (sum != n - 1) return reject("PartsSumMismatch");
      for (std::size_t i = 0; i < layers.size(); ++i)
        for (int x : layers[i]) want[x] = {cert.parts[i], cert.parts[i]};
      break;
    }
    case K::OddC:
    case K::EvenC:
      if (cert.kind == K::OddC ? (cert.n < 5 || cert.n % 2 == 0) : (cert.n < 4 || cert.n % 2 != 0))
        return reject("BadParity");
      if (cert.n != n || !is_bidirected_cycle(d)) return reject("WrongBase");
      if (layers.size() != 2) return reject("BadLayers");
      for (const auto& l : layers)
        for (int x : l) want[x] = {1, 1};
      break;
    case K::A:
      if (cert.n < 4 || cert.n % 2 != 0) return reject("BadOrder");
      if (cert.n != n || !is_antidirected_cycle(d)) return reject("WrongBase");
      if (layers.size() != 2) return reject("BadLayers");
      for (const auto& l : layers)
        for (int x : l) want[x] = d.degree(c.owner(x)).plus > 0 ? DegreePair{1, 0} : DegreePair{0, 1};
      break;
    case K::Merge:
      return reject("NotALeaf");
  }
  for (int x = 0; x < c.color_count(); ++x)
    if (k.f(x) != want[x]) return reject("WrongF");

  if (cert.kind == K::EvenC || cert.kind == K::A) {
    std::vector<int> both = layers[0];
    both.insert(both.end(), layers[1].begin(), layers[1].end());
    std::sort(both.begin(), both.end());
    bool shape = cert.kind == K::EvenC ? detail::is_bidirected_cycle_on(k.h(), both)
                                       : detail::is_antidirected_cycle_on(k.h(), both);
    if (!shape) return reject("NotACycle");
  } else {
    for (const auto& l : layers) {
      std::vector<int> sorted = l;
      std::sort(sorted.begin(), sorted.end());
      if (!detail::saturated_layer(k, sorted)) return reject("NotSaturated");
    }
  }
  return {};
}

inline Verification verify_rec(const Configuration& k, const Certificate& cert) {
  const auto& d = k.base();
  if (d.order() == 0 || !is_connected(d)) return reject("NotConnected");
  if (cert.is_leaf()) return verify_leaf(k, cert);

  const auto& c = k.cover();
  auto vidx = vertex_index(c);
  auto cidx = color_index(c);
  if (cert.v1 != cert.vstar || cert.v2 != cert.vstar) return reject("BadMerge");
  if (!vidx.has(cert.vstar)) return reject("UnknownVertex");
  int vs = vidx(cert.vstar);
  std::vector<char> on1(d.order(), 0);
  for (int l : cert.side) {
    if (!vidx.has(l)) return reject("UnknownVertex");
    on1[vidx(l)] = 1;
  }
  if (!on1[vs]) return reject("BadMerge");
  std::vector<int> s1, s2;
  for (int w = 0; w < d.order(); ++w) {
    if (on1[w]) s1.push_back(w);
    if (!on1[w] || w == vs) s2.push_back(w);
  }
  if (s1.size() < 2 || s2.size() < 2) return reject("NoShrink");
  for (auto [u, w] : d.arcs())
    if (u != vs && w != vs && on1[u] != on1[w]) return reject("CrossingArc");
  if (cert.hinge.size() != c.fibre(vs).size()) return reject("BadHinge");
  VertexFunction fa = k.f(), fb = k.f();
  std::vector<char> seen(c.color_count(), 0);
  for (const auto& h : cert.hinge) {
    if (!cidx.has(h.color)) return reject("UnknownColor");
    int x = cidx(h.color);
    if (c.owner(x) != vs || seen[x]) return reject("BadHinge");
    seen[x] = 1;
    if (h.first.plus < 0 || h.first.minus < 0 || !(h.first <= k.f(x))) return reject("BadHinge");
    fa[x] = h.first;
    fb[x] = k.f(x) - h.first;
  }
  if (auto r = verify_rec(restrict_config_to_vertices(with_f(k, fa), s1), cert.children[0]); !r) return r;
  return verify_rec(restrict_config_to_vertices(with_f(k, fb), s2), cert.children[1]);
}

}  // namespace detail

/// Structural check of a certificate against k; ids are k's labels.
inline Verification verify_certificate(const Configuration& k, const Certificate& cert) {
  return detail::verify_rec(k, cert);
}

inline Verification verify_coloring(const Configuration& k, const Coloring& col) {
  auto chk = check_transversal(k.cover(), col.transversal);
  if (chk.kind != TransversalKind::Full) return detail::reject("NotATransversal");
  auto a = col.transversal, b = col.order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return detail::reject("OrderMismatch");
  if (!replay_order(k.h(), k.f(), col.order)) return detail::reject("NotDegenerate");
  return {};
}

inline Verification verify(const Configuration& k, const Verdict& v) {
  return v.colored() ? verify_coloring(k, v.coloring) : verify_certificate(k, v.certificate);
}

}  // namespace dpdeg

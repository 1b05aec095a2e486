#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "cover.hpp"

namespace dpdeg {

using VertexFunction = std::vector<DegreePair>;  // indexed by color id

/// K = (D, X, H, f).
class Configuration {
public:
  Configuration() = default;
  Configuration(Cover cover, VertexFunction f) : cover_(std::move(cover)), f_(std::move(f)) {
    if (static_cast<int>(f_.size()) != cover_.color_count())
      throw Error(ErrorCode::MissingF, "f must be defined on every color");
    for (const auto& p : f_)
      if (p.plus < 0 || p.minus < 0) throw Error(ErrorCode::BadParameter, "f values must be nonnegative");
  }

  const Cover& cover() const { return cover_; }
  const Digraph& base() const { return cover_.base(); }
  const Digraph& h() const { return cover_.h(); }
  const VertexFunction& f() const { return f_; }
  DegreePair f(int x) const { return f_[x]; }

  DegreePair fibre_sum(int v) const {
    DegreePair s;
    for (int x : cover_.fibre(v)) s += f_[x];
    return s;
  }

private:
  Cover cover_;
  VertexFunction f_;
};

struct Feasibility {
  bool feasible = true;
  std::optional<int> violator;
};

inline Feasibility is_degree_feasible(const Configuration& k) {
  for (int v = 0; v < k.base().order(); ++v)
    if (!(k.fibre_sum(v) >= k.base().degree(v))) return {false, v};
  return {};
}

/// Vertices with f(X_v) != d_D(v); for a feasible configuration these are the
/// vertices with a strict surplus on some coordinate.
inline std::vector<int> surplus_vertices(const Configuration& k) {
  std::vector<int> s;
  for (int v = 0; v < k.base().order(); ++v)
    if (k.fibre_sum(v) != k.base().degree(v)) s.push_back(v);
  return s;
}

/// Greedy peeling of H[scope]: repeatedly remove the smallest vertex x with
/// d+ < f+(x) or d- < f-(x). Returns the removal order when everything goes,
/// else none.
inline std::optional<std::vector<int>> strictly_f_degenerate(const Digraph& h, std::span<const DegreePair> f,
                                                             std::span<const int> scope) {
  int n = h.order();
  std::vector<char> in(n, 0);
  for (int x : scope) in[x] = 1;
  std::vector<int> dp(n, 0), dm(n, 0);
  for (int x : scope) {
    for (int y : h.out(x)) dp[x] += in[y];
    for (int y : h.in(x)) dm[x] += in[y];
  }
  auto removable = [&](int x) { return dp[x] < f[x].plus || dm[x] < f[x].minus; };
  std::set<int> ready;
  for (int x : scope)
    if (removable(x)) ready.insert(x);
  std::vector<int> order;
  while (!ready.empty()) {
    int x = *ready.begin();
    ready.erase(ready.begin());
    in[x] = 0;
    order.push_back(x);
    for (int y : h.out(x))
      if (in[y]) {
        --dm[y];
        if (removable(y)) ready.insert(y);
      }
    for (int y : h.in(x))
      if (in[y]) {
        --dp[y];
        if (removable(y)) ready.insert(y);
      }
  }
  std::size_t want = 0;
  {
    std::set<int> uniq(scope.begin(), scope.end());
    want = uniq.size();
  }
  if (order.size() != want) return std::nullopt;
  return order;
}

inline std::optional<std::vector<int>> strictly_f_degenerate(const Configuration& k, std::span<const int> scope) {
  return strictly_f_degenerate(k.h(), k.f(), scope);
}

/// Replays an elimination order: each x_i must be removable in
/// H[{x_i, ..., x_k}].
inline bool replay_order(const Digraph& h, std::span<const DegreePair> f, std::span<const int> order) {
  std::vector<char> in(h.order(), 0);
  for (int x : order) {
    if (x < 0 || x >= h.order() || in[x]) return false;
    in[x] = 1;
  }
  for (int x : order) {
    int dp = 0, dm = 0;
    for (int y : h.out(x)) dp += in[y];
    for (int y : h.in(x)) dm += in[y];
    if (!(dp < f[x].plus || dm < f[x].minus)) return false;
    in[x] = 0;
  }
  return true;
}

/// Configuration on a subcover `sub` derived from k's cover; f carries over
/// through the color labels.
inline Configuration restrict_config(const Configuration& k, const Cover& sub) {
  std::vector<int> inv;
  int maxlab = 0;
  for (int l : k.cover().color_labels()) maxlab = std::max(maxlab, l);
  inv.assign(maxlab + 1, -1);
  for (int x = 0; x < k.cover().color_count(); ++x) inv[k.cover().color_label(x)] = x;
  VertexFunction f(sub.color_count());
  for (int x = 0; x < sub.color_count(); ++x) f[x] = k.f(inv[sub.color_label(x)]);
  return Configuration(sub, std::move(f));
}

inline Configuration restrict_config_to_vertices(const Configuration& k, std::span<const int> S) {
  std::vector<int> verts(S.begin(), S.end());
  std::sort(verts.begin(), verts.end());
  std::vector<char> keep(k.base().order(), 0);
  for (int v : verts) keep[v] = 1;
  VertexFunction f;
  for (int x = 0; x < k.cover().color_count(); ++x)
    if (keep[k.cover().owner(x)]) f.push_back(k.f(x));
  return Configuration(restrict_to_vertices(k.cover(), verts), std::move(f));
}

inline Configuration restrict_config_to_colors(const Configuration& k, std::span<const int> U) {
  std::vector<int> colors(U.begin(), U.end());
  std::sort(colors.begin(), colors.end());
  VertexFunction f;
  for (int x : colors) f.push_back(k.f(x));
  return Configuration(restrict(k.cover(), colors), std::move(f));
}

/// K/T without precondition checks. Callers guarantee T is a partial
/// transversal; the remainder keeps vertex and color order and labels.
inline Configuration reduce_unchecked(const Configuration& k, std::span<const int> T) {
  const auto& c = k.cover();
  std::vector<char> dom(c.vertex_count(), 0), inT(c.color_count(), 0);
  for (int x : T) {
    dom[c.owner(x)] = 1;
    inT[x] = 1;
  }
  std::vector<int> rest;
  for (int v = 0; v < c.vertex_count(); ++v)
    if (!dom[v]) rest.push_back(v);
  VertexFunction f;
  for (int x = 0; x < c.color_count(); ++x) {
    if (dom[c.owner(x)]) continue;
    DegreePair g = k.f(x);
    int to_t = 0, from_t = 0;
    for (int y : k.h().out(x)) to_t += inT[y];
    for (int y : k.h().in(x)) from_t += inT[y];
    g.plus = std::max(0, g.plus - to_t);
    g.minus = std::max(0, g.minus - from_t);
    f.push_back(g);
  }
  return Configuration(restrict_to_vertices(c, rest), std::move(f));
}

/// K/T. Requires H[T] strictly f-degenerate and D - dom(T) connected.
inline Configuration reduce(const Configuration& k, std::span<const int> T) {
  auto chk = check_transversal(k.cover(), T);
  if (chk.kind == TransversalKind::Invalid) throw Error(ErrorCode::InvalidTransversal, "not a partial transversal");
  if (!strictly_f_degenerate(k, T))
    throw Error(ErrorCode::NotStrictlyDegenerate, "H[T] is not strictly f-degenerate");
  std::vector<char> dom(k.base().order(), 0);
  for (int v : chk.dom) dom[v] = 1;
  std::vector<int> rest;
  for (int v = 0; v < k.base().order(); ++v)
    if (!dom[v]) rest.push_back(v);
  if (!is_connected(induced(k.base(), rest)))
    throw Error(ErrorCode::DisconnectedRemainder, "D - dom(T) is not connected");
  return reduce_unchecked(k, T);
}

/// The configuration of the vector-function formulation: associated cover of
/// the constant list [1,p], with g(v,i) = f_i(v). Color of (v,i) is v*p+i-1.
inline Configuration from_vector_function(const Digraph& d, int p, const std::vector<std::vector<DegreePair>>& fvec) {
  if (p < 1) throw Error(ErrorCode::BadParameter, "p must be at least 1");
  if (static_cast<int>(fvec.size()) != p) throw Error(ErrorCode::BadParameter, "need p vertex functions");
  for (const auto& fi : fvec)
    if (static_cast<int>(fi.size()) != d.order()) throw Error(ErrorCode::BadParameter, "function size mismatch");
  auto cover = constant_list_cover(d, p);
  VertexFunction g(cover.color_count());
  for (int v = 0; v < d.order(); ++v)
    for (int i = 0; i < p; ++i) g[v * p + i] = fvec[i][v];
  return Configuration(std::move(cover), std::move(g));
}

/// d_{H[T + x]}(x) for x outside T.
inline DegreePair degree_into(const Digraph& h, std::span<const char> inT, int x) {
  DegreePair g;
  for (int y : h.out(x)) g.plus += inT[y];
  for (int y : h.in(x)) g.minus += inT[y];
  return g;
}

}  // namespace dpdeg

namespace dpdeg {

/// Inverse of a cover's label maps: label -> local id (or -1).
class LabelIndex {
public:
  LabelIndex() = default;
  explicit LabelIndex(const std::vector<int>& labels) {
    int mx = -1;
    for (int l : labels) mx = std::max(mx, l);
    local_.assign(mx + 1, -1);
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) local_[labels[i]] = i;
  }
  int operator()(int label) const { return has(label) ? local_[label] : -1; }
  bool has(int label) const {
    return label >= 0 && label < static_cast<int>(local_.size()) && local_[label] >= 0;
  }

private:
  std::vector<int> local_;
};

inline LabelIndex color_index(const Cover& c) { return LabelIndex(c.color_labels()); }
inline LabelIndex vertex_index(const Cover& c) { return LabelIndex(c.vertex_labels()); }

inline Configuration with_f(const Configuration& k, VertexFunction f) { return Configuration(k.cover(), std::move(f)); }

/// Colors a connected degree-feasible configuration that has a surplus at
/// `root`: vertices are processed in reverse BFS order from the root (so the
/// remainder stays connected and keeps the surplus), each taking its smallest
/// color whose reduced f is nonzero. Returns local color ids, or none if some
/// step finds no usable color (which feasibility rules out).
inline std::optional<std::vector<int>> greedy_surplus_coloring(const Configuration& k, int root) {
  const auto& d = k.base();
  const auto& h = k.h();
  const auto& c = k.cover();
  auto g = underlying(d);
  std::vector<int> bfs{root};
  std::vector<char> seen(d.order(), 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < bfs.size(); ++i)
    for (int w : g[bfs[i]])
      if (!seen[w]) {
        seen[w] = 1;
        bfs.push_back(w);
      }
  VertexFunction f = k.f();
  std::vector<char> removed(d.order(), 0);
  std::vector<int> T;
  for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
    int v = *it;
    int pick = -1;
    for (int x : c.fibre(v))
      if (!f[x].is_zero()) {
        pick = x;
        break;
      }
    if (pick < 0) return std::nullopt;
    T.push_back(pick);
    removed[v] = 1;
    for (int y : h.out(pick))
      if (!removed[c.owner(y)]) f[y].minus = std::max(0, f[y].minus - 1);
    for (int y : h.in(pick))
      if (!removed[c.owner(y)]) f[y].plus = std::max(0, f[y].plus - 1);
  }
  std::sort(T.begin(), T.end());
  return T;
}

}  // namespace dpdeg

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "digraph.hpp"

namespace dpdeg {

/// A cover (X,H) of a base digraph D. Colors are dense ids 0..m-1 and are the
/// vertices of H. Every cover also carries labels: the vertex and color ids
/// these had in the cover it was restricted from (identity for a freshly
/// built cover), so results computed on subcovers can be reported in the
/// caller's ids.
class Cover {
public:
  Cover() = default;

  /// Fibres must be independent in H and every arc between fibres must follow
  /// a base arc, one matching per arc. fibres[v] lists the colors of X_v; the union
  /// must be exactly 0..m-1.
  static Cover build(Digraph base, std::vector<std::vector<int>> fibres, std::span<const Arc> harcs) {
    int n = base.order();
    if (static_cast<int>(fibres.size()) != n)
      throw Error(ErrorCode::VertexOutOfRange, "expected one fibre per base vertex");
    int m = 0;
    for (const auto& f : fibres) m += static_cast<int>(f.size());
    std::vector<int> owner(m, -1);
    for (int v = 0; v < n; ++v)
      for (int x : fibres[v]) {
        if (x < 0 || x >= m)
          throw Error(ErrorCode::ColorIdsNotDense, "color ids must be exactly 0.." + std::to_string(m - 1), {x});
        if (owner[x] >= 0) throw Error(ErrorCode::FibreOverlap, "color in two fibres", {x});
        owner[x] = v;
      }
    std::vector<Arc> sorted(harcs.begin(), harcs.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::map<int, int>> outp(m), inp(m);  // partner keyed by fibre
    for (auto [x, y] : sorted) {
      if (x < 0 || x >= m || y < 0 || y >= m) throw Error(ErrorCode::UnknownColor, "arc endpoint is not a color", {x, y});
      int u = owner[x], v = owner[y];
      if (u == v) throw Error(ErrorCode::FibreNotIndependent, "arc inside a fibre", {x, y});
      if (!base.has_arc(u, v)) throw Error(ErrorCode::ArcWithoutBaseArc, "no base arc", {u, v});
      if (!outp[x].emplace(v, y).second || !inp[y].emplace(u, x).second)
        throw Error(ErrorCode::NotAMatching, "arcs between fibres do not form a matching", {u, v});
    }
    Cover c;
    c.base_ = std::move(base);
    c.h_ = Digraph::build(m, sorted);
    c.owner_ = std::move(owner);
    c.fibres_ = std::move(fibres);
    for (auto& f : c.fibres_) std::sort(f.begin(), f.end());
    c.vlabel_.resize(n);
    std::iota(c.vlabel_.begin(), c.vlabel_.end(), 0);
    c.clabel_.resize(m);
    std::iota(c.clabel_.begin(), c.clabel_.end(), 0);
    return c;
  }

  const Digraph& base() const { return base_; }
  const Digraph& h() const { return h_; }
  int color_count() const { return h_.order(); }
  int vertex_count() const { return base_.order(); }
  int owner(int x) const { return owner_[x]; }
  const std::vector<int>& fibre(int v) const { return fibres_[v]; }
  const std::vector<std::vector<int>>& fibres() const { return fibres_; }

  int vertex_label(int v) const { return vlabel_[v]; }
  int color_label(int x) const { return clabel_[x]; }
  const std::vector<int>& vertex_labels() const { return vlabel_; }
  const std::vector<int>& color_labels() const { return clabel_; }

  /// The color of X_w that x points to, if any. Out-neighbours of x lie in
  /// distinct fibres, so this scans at most d+_D(owner(x)) entries.
  std::optional<int> out_partner(int x, int w) const {
    for (int y : h_.out(x))
      if (owner_[y] == w) return y;
    return std::nullopt;
  }
  std::optional<int> in_partner(int x, int w) const {
    for (int y : h_.in(x))
      if (owner_[y] == w) return y;
    return std::nullopt;
  }

  friend bool operator==(const Cover& a, const Cover& b) {
    return a.base_ == b.base_ && a.h_ == b.h_ && a.fibres_ == b.fibres_ && a.vlabel_ == b.vlabel_ &&
           a.clabel_ == b.clabel_;
  }

  /// Assembles an already valid cover; used by operations that derive covers
  /// from validated ones.
  static Cover assemble(Digraph base, Digraph h, std::vector<std::vector<int>> fibres,
                        std::vector<int> vlabel, std::vector<int> clabel) {
    Cover c;
    c.owner_.assign(h.order(), -1);
    for (int v = 0; v < static_cast<int>(fibres.size()); ++v)
      for (int x : fibres[v]) c.owner_[x] = v;
    c.base_ = std::move(base);
    c.h_ = std::move(h);
    c.fibres_ = std::move(fibres);
    c.vlabel_ = std::move(vlabel);
    c.clabel_ = std::move(clabel);
    return c;
  }

private:
  Digraph base_;
  Digraph h_;
  std::vector<int> owner_;
  std::vector<std::vector<int>> fibres_;
  std::vector<int> vlabel_, clabel_;
};

struct SaturationInfo {
  bool saturated = false;
  std::optional<int> uniform_r;
};

inline SaturationInfo saturation_and_uniformity(const Cover& c) {
  SaturationInfo s{true, std::nullopt};
  const auto& d = c.base();
  for (auto [u, v] : d.arcs()) {
    if (c.fibre(u).size() != c.fibre(v).size()) {
      s.saturated = false;
      break;
    }
    for (int x : c.fibre(u))
      if (!c.out_partner(x, v)) {
        s.saturated = false;
        break;
      }
    if (!s.saturated) break;
  }
  if (d.order() > 0) {
    int r = static_cast<int>(c.fibre(0).size());
    bool uni = true;
    for (int v = 1; v < d.order(); ++v) uni = uni && static_cast<int>(c.fibre(v).size()) == r;
    if (uni) s.uniform_r = r;
  }
  return s;
}

/// Subcover on the colors U (local ids). The base is D[dom(U)]; vertices and
/// colors keep their relative order, and labels carry over.
inline Cover restrict(const Cover& c, std::span<const int> U) {
  std::vector<char> in(c.color_count(), 0);
  for (int x : U) in[x] = 1;
  std::vector<int> verts;
  for (int v = 0; v < c.vertex_count(); ++v)
    for (int x : c.fibre(v))
      if (in[x]) {
        verts.push_back(v);
        break;
      }
  std::vector<int> colors;
  for (int x = 0; x < c.color_count(); ++x)
    if (in[x]) colors.push_back(x);
  std::vector<int> cpos(c.color_count(), -1), vpos(c.vertex_count(), -1);
  for (std::size_t i = 0; i < colors.size(); ++i) cpos[colors[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < verts.size(); ++i) vpos[verts[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> fib(verts.size());
  for (int x : colors) fib[vpos[c.owner(x)]].push_back(cpos[x]);
  std::vector<int> vl, cl;
  for (int v : verts) vl.push_back(c.vertex_label(v));
  for (int x : colors) cl.push_back(c.color_label(x));
  return Cover::assemble(induced(c.base(), verts), induced(c.h(), colors), std::move(fib), std::move(vl),
                         std::move(cl));
}

/// (X,H)/D[S]: keeps exactly the base vertices S, even those with empty
/// fibres.
inline Cover restrict_to_vertices(const Cover& c, std::span<const int> S) {
  std::vector<int> verts(S.begin(), S.end());
  std::sort(verts.begin(), verts.end());
  std::vector<int> vpos(c.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) vpos[verts[i]] = static_cast<int>(i);
  std::vector<int> colors;
  for (int x = 0; x < c.color_count(); ++x)
    if (vpos[c.owner(x)] >= 0) colors.push_back(x);
  std::vector<int> cpos(c.color_count(), -1);
  for (std::size_t i = 0; i < colors.size(); ++i) cpos[colors[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> fib(verts.size());
  for (int x : colors) fib[vpos[c.owner(x)]].push_back(cpos[x]);
  std::vector<int> vl, cl;
  for (int v : verts) vl.push_back(c.vertex_label(v));
  for (int x : colors) cl.push_back(c.color_label(x));
  return Cover::assemble(induced(c.base(), verts), induced(c.h(), colors), std::move(fib), std::move(vl),
                         std::move(cl));
}

/// C(D,L): X_v = {v} x L(v), arcs (u,c) -> (v,c) for uv in A(D). Colors are
/// numbered vertex by vertex, list entries in increasing order.
inline Cover associated_cover(const Digraph& d, const std::vector<std::vector<int>>& lists) {
  if (static_cast<int>(lists.size()) != d.order()) throw Error(ErrorCode::BadParameter, "one list per vertex");
  std::vector<std::vector<int>> fib(d.order());
  std::vector<std::map<int, int>> id(d.order());
  int next = 0;
  for (int v = 0; v < d.order(); ++v) {
    std::set<int> l(lists[v].begin(), lists[v].end());
    if (l.empty()) throw Error(ErrorCode::EmptyList, "empty list", {v});
    for (int c : l) {
      id[v][c] = next;
      fib[v].push_back(next++);
    }
  }
  std::vector<Arc> harcs;
  for (auto [u, v] : d.arcs())
    for (auto [c, x] : id[u])
      if (auto it = id[v].find(c); it != id[v].end()) harcs.emplace_back(x, it->second);
  return Cover::build(d, std::move(fib), harcs);
}

/// The k-uniform associated cover of the constant list [1,k].
inline Cover constant_list_cover(const Digraph& d, int k) {
  std::vector<int> l(k);
  std::iota(l.begin(), l.end(), 1);
  return associated_cover(d, std::vector<std::vector<int>>(d.order(), l));
}

enum class TransversalKind { Full, Partial, Invalid };

struct TransversalCheck {
  TransversalKind kind = TransversalKind::Invalid;
  std::vector<int> dom;
};

inline TransversalCheck check_transversal(const Cover& c, std::span<const int> T) {
  TransversalCheck r;
  std::vector<int> hits(c.vertex_count(), 0);
  std::set<int> seen;
  for (int x : T) {
    if (x < 0 || x >= c.color_count() || !seen.insert(x).second) return r;
    if (++hits[c.owner(x)] > 1) return r;
  }
  for (int v = 0; v < c.vertex_count(); ++v)
    if (hits[v]) r.dom.push_back(v);
  r.kind = static_cast<int>(r.dom.size()) == c.vertex_count() ? TransversalKind::Full : TransversalKind::Partial;
  return r;
}

/// Colors of H sharing a weak component of H never sit in one fibre, and two
/// colors in one component over a base arc uv are joined by an arc. This is
/// exactly the condition for relabelling colors so that every matching is a
/// partial identity, i.e. for the cover to be C(D,L) for some L.
inline bool is_list_associated(const Cover& c) {
  auto comps = components(c.h());
  std::vector<int> comp(c.color_count());
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int x : comps[i]) comp[x] = static_cast<int>(i);
  for (const auto& cc : comps) {
    std::set<int> owners;
    for (int x : cc)
      if (!owners.insert(c.owner(x)).second) return false;
  }
  for (auto [u, v] : c.base().arcs())
    for (int x : c.fibre(u))
      for (int y : c.fibre(v))
        if (comp[x] == comp[y] && !c.h().has_arc(x, y)) return false;
  return true;
}

}  // namespace dpdeg

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <utility>

#include "canonical.hpp"
#include "digraph.hpp"

namespace dpdeg {

struct PropertyFlags {
  bool hereditary = false;
  bool monotone = false;
  bool additive = false;
  bool nontrivial = false;
};

enum class DExactness { ClosedForm, SearchedUpperBound };

struct DValue {
  DegreePair value;
  DExactness exactness = DExactness::ClosedForm;
};

/// A digraph property given by a membership predicate. The predicate must be
/// pure and isomorphism-invariant; that part is the caller's contract.
class DigraphProperty {
public:
  using Predicate = std::function<bool(const Digraph&)>;

  DigraphProperty(std::string name, Predicate pred, PropertyFlags flags,
                  std::optional<DegreePair> closed_d = std::nullopt)
      : name_(std::move(name)),
        pred_(std::move(pred)),
        flags_(flags),
        closed_d_(closed_d),
        cache_(std::make_shared<Cache>()) {}

  const std::string& name() const { return name_; }
  bool contains(const Digraph& d) const { return pred_(d); }
  bool operator()(const Digraph& d) const { return pred_(d); }
  const PropertyFlags& flags() const { return flags_; }
  std::optional<DegreePair> closed_form_d() const { return closed_d_; }

  bool reliable() const { return flags_.nontrivial && flags_.hereditary && flags_.additive; }
  bool strongly_reliable() const { return reliable() && flags_.monotone; }

private:
  friend DValue compute_d(const DigraphProperty&, int);

  struct Cache {
    std::mutex mu;
    std::map<int, DValue> by_nmax;
  };

  std::string name_;
  Predicate pred_;
  PropertyFlags flags_;
  std::optional<DegreePair> closed_d_;
  std::shared_ptr<Cache> cache_;
};

/// Membership in SD_m by peeling vertices with min(d+, d-) < m.
inline bool strictly_m_degenerate(const Digraph& d, int m) {
  int n = d.order();
  std::vector<int> dp(n), dm(n);
  std::vector<char> gone(n, 0);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    dp[v] = d.degree(v).plus;
    dm[v] = d.degree(v).minus;
    if (std::min(dp[v], dm[v]) < m) {
      stack.push_back(v);
      gone[v] = 1;
    }
  }
  int removed = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int w : d.out(v))
      if (!gone[w] && std::min(dp[w], --dm[w]) < m) {
        gone[w] = 1;
        stack.push_back(w);
      }
    for (int w : d.in(v))
      if (!gone[w] && std::min(--dp[w], dm[w]) < m) {
        gone[w] = 1;
        stack.push_back(w);
      }
  }
  return removed == n;
}

inline DigraphProperty acyclic_property() {
  return DigraphProperty("ad", [](const Digraph& d) { return is_acyclic(d); },
                         {true, true, true, true}, DegreePair{1, 1});
}

inline DigraphProperty degenerate_property(int m) {
  if (m < 1) throw Error(ErrorCode::BadParameter, "sd needs m >= 1");
  return DigraphProperty("sd:" + std::to_string(m),
                         [m](const Digraph& d) { return strictly_m_degenerate(d, m); },
                         {true, true, true, true}, DegreePair{m, m});
}

/// "ad", "sd:m" (also "sd" with an explicit m).
inline DigraphProperty builtin(const std::string& name, std::optional<int> m = std::nullopt) {
  if (name == "ad") return acyclic_property();
  if (name == "sd") {
    if (!m) throw Error(ErrorCode::BadParameter, "sd needs a parameter m");
    return degenerate_property(*m);
  }
  if (name.rfind("sd:", 0) == 0) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(name.substr(3), &used);
      if (used != name.size() - 3) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameter, "cannot parse property '" + name + "'");
    }
    return degenerate_property(v);
  }
  throw Error(ErrorCode::BadParameter, "unknown property '" + name + "'");
}

/// Every component is a bidirected complete digraph. Hereditary and additive
/// but not closed under arc deletion.
inline DigraphProperty bidirected_cliques_property() {
  return DigraphProperty(
      "cliques",
      [](const Digraph& d) {
        for (const auto& c : components(d))
          if (!is_bidirected_complete(induced(d, c))) return false;
        return true;
      },
      {true, false, true, true});
}

inline bool in_CR(const DigraphProperty& p, const Digraph& d) {
  if (p.contains(d)) return false;
  for (int v = 0; v < d.order(); ++v)
    if (!p.contains(remove_vertex(d, v))) return false;
  return true;
}

/// d(P): the closed form when known, else the componentwise minimum degree
/// over CR members among connected digraphs with at most n_max vertices.
inline DValue compute_d(const DigraphProperty& p, int n_max) {
  if (auto c = p.closed_form_d()) return {*c, DExactness::ClosedForm};
  if (n_max < 2) throw Error(ErrorCode::BadParameter, "n_max must be at least 2");
  {
    std::lock_guard<std::mutex> lock(p.cache_->mu);
    if (auto it = p.cache_->by_nmax.find(n_max); it != p.cache_->by_nmax.end()) return it->second;
  }
  std::optional<DegreePair> best;
  for (int n = 1; n <= n_max; ++n)
    for (const auto& d : connected_digraphs(n)) {
      if (!in_CR(p, d)) continue;
      auto prof = degree_profile(d);
      if (!best)
        best = prof.min;
      else
        best = DegreePair{std::min(best->plus, prof.min.plus), std::min(best->minus, prof.min.minus)};
    }
  if (!best) throw Error(ErrorCode::NoCRFound, "no CR member with at most " + std::to_string(n_max) + " vertices");
  DValue r{*best, DExactness::SearchedUpperBound};
  std::lock_guard<std::mutex> lock(p.cache_->mu);
  p.cache_->by_nmax.emplace(n_max, r);
  return r;
}

/// d(P) for properties the structure harness accepts.
inline DegreePair d_of(const DigraphProperty& p) { return compute_d(p, 4).value; }

/// Registers a user predicate after spot-checking its declared flags on random
/// small digraphs. Throws PropertyRejected on a counterexample.
inline DigraphProperty register_property(std::string name, DigraphProperty::Predicate pred,
                                         PropertyFlags flags, std::uint64_t seed = 1,
                                         int samples = 400) {
  DigraphProperty p(std::move(name), std::move(pred), flags);
  auto reject = [&](const std::string& why) {
    throw Error(ErrorCode::PropertyRejected, p.name() + ": " + why);
  };
  if (flags.nontrivial && flags.hereditary) {
    if (!p.contains(Digraph::build(0, {})) || !p.contains(Digraph::build(1, {})))
      reject("K0 or K1 is not a member");
  }
  std::mt19937_64 rng(seed);
  std::vector<Digraph> members;
  for (int s = 0; s < samples; ++s) {
    int n = 1 + static_cast<int>(rng() % 5);
    double density = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && std::uniform_real_distribution<double>(0, 1)(rng) < density) arcs.emplace_back(u, v);
    auto d = Digraph::build(n, arcs);
    // Walk down by arc deletion until a member shows up, to exercise the
    // implications on members rather than only on non-members.
    while (!p.contains(d) && d.arc_count() > 0)
      d = remove_arc(d, d.arcs()[rng() % d.arc_count()]);
    if (!p.contains(d)) continue;
    if (flags.hereditary)
      for (int v = 0; v < d.order(); ++v)
        if (!p.contains(remove_vertex(d, v))) reject("not hereditary");
    if (flags.monotone)
      for (const auto& a : d.arcs())
        if (!p.contains(remove_arc(d, a))) reject("not monotone");
    members.push_back(d);
  }
  if (flags.additive && members.size() >= 2)
    for (int s = 0; s < samples / 4; ++s) {
      const auto& a = members[rng() % members.size()];
      const auto& b = members[rng() % members.size()];
      if (a.order() + b.order() > 10) continue;
      if (!p.contains(disjoint_union(a, b))) reject("not additive");
    }
  return p;
}

}  // namespace dpdeg

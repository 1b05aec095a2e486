#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"

namespace dpdeg {

// Text formats. A document is a sequence of blocks:
//
//   digraph <name>          cover <name>               (or: config <name>)
//   vertices <n>            base <digraph-name>
//   arc <u> <v>             fibre <v> : <x1> <x2> ...
//   end                     harc <x> <y>
//                           f <x> <plus> <minus>       (configurations only)
//                           end
//
// Blank lines and '#' comments are ignored; unknown keywords are errors.

struct NamedDigraph {
  std::string name;
  Digraph digraph;
};

struct NamedCover {
  std::string name;
  std::string base;
  Cover cover;
  std::optional<VertexFunction> f;  // present iff the block had f lines
};

struct Document {
  std::vector<NamedDigraph> digraphs;
  std::vector<NamedCover> covers;

  const Digraph* digraph(const std::string& name) const {
    for (const auto& d : digraphs)
      if (d.name == name) return &d.digraph;
    return nullptr;
  }
};

namespace detail {

class LineReader {
public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next non-empty line split into tokens; false at end of input.
  bool next(std::vector<std::string>& toks) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::istringstream ss(line);
      toks.clear();
      for (std::string t; ss >> t;) toks.push_back(t);
      if (!toks.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no_) + ": " + why, {line_no_});
  }

  int integer(const std::string& s) const {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      fail("expected an integer, got '" + s + "'");
    }
  }

  void arity(const std::vector<std::string>& toks, std::size_t n) const {
    if (toks.size() != n) fail("'" + toks[0] + "' expects " + std::to_string(n - 1) + " arguments");
  }

private:
  std::istream& in_;
  int line_no_ = 0;
};

inline NamedDigraph parse_digraph_block(LineReader& r, const std::string& name) {
  std::optional<int> n;
  std::vector<Arc> arcs;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "end") {
      r.arity(t, 1);
      if (!n) r.fail("digraph '" + name + "' has no 'vertices' line");
      return {name, Digraph::build(*n, arcs)};
    }
    if (t[0] == "vertices") {
      r.arity(t, 2);
      if (n) r.fail("duplicate 'vertices'");
      n = r.integer(t[1]);
      if (*n < 0) r.fail("negative vertex count");
    } else if (t[0] == "arc") {
      r.arity(t, 3);
      arcs.emplace_back(r.integer(t[1]), r.integer(t[2]));
    } else {
      r.fail("unknown keyword '" + t[0] + "' in digraph block");
    }
  }
  r.fail("digraph '" + name + "' is missing 'end'");
}

inline NamedCover parse_cover_block(LineReader& r, const std::string& name, const Document& doc) {
  std::optional<std::string> base;
  std::map<int, std::vector<int>> fibres;
  std::vector<Arc> harcs;
  std::map<int, DegreePair> f;
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "end") {
      r.arity(t, 1);
      if (!base) r.fail("cover '" + name + "' has no 'base' line");
      const Digraph* d = doc.digraph(*base);
      if (!d) r.fail("unknown base digraph '" + *base + "'");
      std::vector<std::vector<int>> fib(d->order());
      for (auto& [v, xs] : fibres) {
        if (v < 0 || v >= d->order()) throw Error(ErrorCode::VertexOutOfRange, "fibre of unknown vertex", {v});
        fib[v] = xs;
      }
      NamedCover nc{name, *base, Cover::build(*d, std::move(fib), harcs), std::nullopt};
      if (!f.empty()) {
        VertexFunction fv(nc.cover.color_count());
        for (int x = 0; x < nc.cover.color_count(); ++x) {
          auto it = f.find(x);
          if (it == f.end()) throw Error(ErrorCode::MissingF, "no f value for color", {x});
          fv[x] = it->second;
        }
        for (auto& [x, g] : f)
          if (x < 0 || x >= nc.cover.color_count()) throw Error(ErrorCode::UnknownColor, "f of unknown color", {x});
        nc.f = std::move(fv);
      }
      return nc;
    }
    if (t[0] == "base") {
      r.arity(t, 2);
      if (base) r.fail("duplicate 'base'");
      base = t[1];
    } else if (t[0] == "fibre") {
      if (t.size() < 3 || t[2] != ":") r.fail("expected 'fibre <v> : <colors...>'");
      int v = r.integer(t[1]);
      if (fibres.count(v)) r.fail("duplicate fibre for vertex " + t[1]);
      auto& xs = fibres[v];
      for (std::size_t i = 3; i < t.size(); ++i) xs.push_back(r.integer(t[i]));
    } else if (t[0] == "harc") {
      r.arity(t, 3);
      harcs.emplace_back(r.integer(t[1]), r.integer(t[2]));
    } else if (t[0] == "f") {
      r.arity(t, 4);
      int x = r.integer(t[1]);
      if (f.count(x)) r.fail("duplicate f for color " + t[1]);
      DegreePair g{r.integer(t[2]), r.integer(t[3])};
      if (g.plus < 0 || g.minus < 0) r.fail("f values must be nonnegative");
      f[x] = g;
    } else {
      r.fail("unknown keyword '" + t[0] + "' in cover block");
    }
  }
  r.fail("cover '" + name + "' is missing 'end'");
}

}  // namespace detail

inline Document parse_document(std::istream& in) {
  Document doc;
  detail::LineReader r(in);
  std::vector<std::string> t;
  while (r.next(t)) {
    if (t[0] == "digraph") {
      r.arity(t, 2);
      if (doc.digraph(t[1])) r.fail("duplicate digraph name '" + t[1] + "'");
      doc.digraphs.push_back(detail::parse_digraph_block(r, t[1]));
    } else if (t[0] == "cover" || t[0] == "config") {
      r.arity(t, 2);
      doc.covers.push_back(detail::parse_cover_block(r, t[1], doc));
    } else {
      r.fail("expected 'digraph' or 'cover', got '" + t[0] + "'");
    }
  }
  return doc;
}

inline Document parse_document(const std::string& text) {
  std::istringstream in(text);
  return parse_document(in);
}

inline Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return parse_document(in);
}

/// The first digraph of a document.
inline Digraph first_digraph(const Document& doc) {
  if (doc.digraphs.empty()) throw Error(ErrorCode::ParseError, "no digraph in input");
  return doc.digraphs.front().digraph;
}

/// The first cover block, which must carry f.
inline Configuration first_configuration(const Document& doc) {
  for (const auto& c : doc.covers)
    if (c.f) return Configuration(c.cover, *c.f);
  if (!doc.covers.empty()) throw Error(ErrorCode::MissingF, "cover has no f lines");
  throw Error(ErrorCode::ParseError, "no configuration in input");
}

inline void write_digraph(std::ostream& os, const std::string& name, const Digraph& d) {
  os << "digraph " << name << "\nvertices " << d.order() << '\n';
  for (auto [u, v] : d.arcs()) os << "arc " << u << ' ' << v << '\n';
  os << "end\n";
}

inline void write_cover(std::ostream& os, const std::string& name, const std::string& base, const Cover& c,
                        const VertexFunction* f = nullptr) {
  os << (f ? "config " : "cover ") << name << "\nbase " << base << '\n';
  for (int v = 0; v < c.vertex_count(); ++v) {
    os << "fibre " << v << " :";
    for (int x : c.fibre(v)) os << ' ' << x;
    os << '\n';
  }
  for (auto [x, y] : c.h().arcs()) os << "harc " << x << ' ' << y << '\n';
  if (f)
    for (int x = 0; x < c.color_count(); ++x) os << "f " << x << ' ' << (*f)[x].plus << ' ' << (*f)[x].minus << '\n';
  os << "end\n";
}

/// A self-contained configuration file: the base digraph, then the cover.
inline void write_configuration(std::ostream& os, const std::string& name, const Configuration& k) {
  write_digraph(os, name + "_D", k.base());
  write_cover(os, name, name + "_D", k.cover(), &k.f());
}

inline std::string configuration_text(const std::string& name, const Configuration& k) {
  std::ostringstream os;
  write_configuration(os, name, k);
  return os.str();
}

/// H as a DOT digraph, one cluster per fibre.
inline void write_dot(std::ostream& os, const Cover& c, const VertexFunction* f = nullptr) {
  os << "digraph H {\n";
  for (int v = 0; v < c.vertex_count(); ++v) {
    os << "  subgraph cluster_" << v << " {\n    label=\"X_" << v << "\";\n";
    for (int x : c.fibre(v)) {
      os << "    x" << x << " [label=\"" << x;
      if (f) os << ' ' << (*f)[x];
      os << "\"];\n";
    }
    os << "  }\n";
  }
  for (auto [x, y] : c.h().arcs()) os << "  x" << x << " -> x" << y << ";\n";
  os << "}\n";
}

}  // namespace dpdeg

#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "digraph.hpp"

namespace dpdeg {

/// Proof tree that a configuration is constructible. Leaves name a family and
/// its transversal layers; a merge names the hinge vertex, the vertex set of
/// the first side and the split of f over the hinge fibre. All ids are the
/// labels of the certified configuration.
struct Certificate {
  enum class Kind { M, K, OddC, EvenC, A, Merge };

  struct HingeSplit {
    int color = -1;
    DegreePair first;  // f1 at this color; the second side gets f - f1
    friend bool operator==(const HingeSplit&, const HingeSplit&) = default;
  };

  Kind kind = Kind::M;
  int n = 0;
  std::vector<int> parts;                // K only
  std::vector<std::vector<int>> layers;  // T, or T1..Tp
  int v1 = -1, v2 = -1, vstar = -1;      // merge
  std::vector<int> side;                 // merge: vertices of the first side, hinge included
  std::vector<HingeSplit> hinge;         // merge
  std::vector<Certificate> children;     // merge: exactly two

  friend bool operator==(const Certificate&, const Certificate&) = default;

  bool is_leaf() const { return kind != Kind::Merge; }
  int depth() const {
    if (is_leaf()) return 0;
    return 1 + std::max(children[0].depth(), children[1].depth());
  }
  std::vector<const Certificate*> leaves() const {
    if (is_leaf()) return {this};
    auto a = children[0].leaves();
    auto b = children[1].leaves();
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
};

inline const char* tag(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::M: return "M";
    case Certificate::Kind::K: return "K";
    case Certificate::Kind::OddC: return "c-odd";
    case Certificate::Kind::EvenC: return "c-even";
    case Certificate::Kind::A: return "A";
    case Certificate::Kind::Merge: return "merge";
  }
  return "?";
}

namespace detail {
inline void put_list(std::ostream& os, const std::vector<int>& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  os << ')';
}
}  // namespace detail

inline void write_certificate(std::ostream& os, const Certificate& c) {
  using K = Certificate::Kind;
  os << '(' << tag(c.kind);
  switch (c.kind) {
    case K::M:
      os << " T=";
      detail::put_list(os, c.layers.at(0));
      break;
    case K::K:
      os << " n=" << c.n << " parts=";
      detail::put_list(os, c.parts);
      for (std::size_t i = 0; i < c.layers.size(); ++i) {
        os << " T" << i + 1 << '=';
        detail::put_list(os, c.layers[i]);
      }
      break;
    case K::OddC:
    case K::EvenC:
    case K::A:
      os << " n=" << c.n;
      for (std::size_t i = 0; i < c.layers.size(); ++i) {
        os << " T" << i + 1 << '=';
        detail::put_list(os, c.layers[i]);
      }
      break;
    case K::Merge:
      os << " v1=" << c.v1 << " v2=" << c.v2 << " vstar=" << c.vstar << " side=";
      detail::put_list(os, c.side);
      os << " hinge=(";
      for (std::size_t i = 0; i < c.hinge.size(); ++i)
        os << (i ? " " : "") << '(' << c.hinge[i].color << ' ' << c.hinge[i].first.plus << ' '
           << c.hinge[i].first.minus << ')';
      os << ')';
      for (const auto& ch : c.children) {
        os << ' ';
        write_certificate(os, ch);
      }
      break;
  }
  os << ')';
}

inline std::string to_sexpr(const Certificate& c) {
  std::ostringstream os;
  write_certificate(os, c);
  return os.str();
}

namespace detail {

class SexprReader {
public:
  explicit SexprReader(std::string s) : s_(std::move(s)) {}

  Certificate certificate() {
    expect('(');
    std::string t = word();
    Certificate c;
    using K = Certificate::Kind;
    if (t == "M") c.kind = K::M;
    else if (t == "K") c.kind = K::K;
    else if (t == "c-odd") c.kind = K::OddC;
    else if (t == "c-even") c.kind = K::EvenC;
    else if (t == "A") c.kind = K::A;
    else if (t == "merge") c.kind = K::Merge;
    else fail("unknown certificate tag '" + t + "'");
    for (;;) {
      skip();
      if (peek() == ')') {
        ++i_;
        break;
      }
      if (peek() == '(') {
        c.children.push_back(certificate());
        continue;
      }
      std::string key = word_until('=');
      expect('=');
      if (key == "n") c.n = number();
      else if (key == "v1") c.v1 = number();
      else if (key == "v2") c.v2 = number();
      else if (key == "vstar") c.vstar = number();
      else if (key == "parts") c.parts = list();
      else if (key == "side") c.side = list();
      else if (key == "T" || (key.size() > 1 && key[0] == 'T')) c.layers.push_back(list());
      else if (key == "hinge") {
        expect('(');
        for (;;) {
          skip();
          if (peek() == ')') {
            ++i_;
            break;
          }
          auto l = list();
          if (l.size() != 3) fail("hinge entries are (color plus minus)");
          c.hinge.push_back({l[0], {l[1], l[2]}});
        }
      } else fail("unknown field '" + key + "'");
    }
    if (c.kind == K::Merge && c.children.size() != 2) fail("merge needs two children");
    if (c.kind != K::Merge && !c.children.empty()) fail("leaf with children");
    return c;
  }

  void finish() {
    skip();
    if (i_ != s_.size()) fail("trailing input");
  }

private:
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::ParseError, "certificate: " + why + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() {
    if (i_ >= s_.size()) fail("unexpected end");
    return s_[i_];
  }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::string word() {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' && s_[i_] != ')')
      ++i_;
    return s_.substr(b, i_ - b);
  }
  std::string word_until(char stop) {
    skip();
    std::size_t b = i_;
    while (i_ < s_.size() && s_[i_] != stop && !std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(b, i_ - b);
  }
  int number() {
    skip();
    std::size_t b = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected a number");
    return std::stoi(s_.substr(b, i_ - b));
  }
  std::vector<int> list() {
    expect('(');
    std::vector<int> v;
    for (;;) {
      skip();
      if (peek() == ')') {
        ++i_;
        return v;
      }
      v.push_back(number());
    }
  }

  std::string s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline Certificate parse_certificate(const std::string& s) {
  detail::SexprReader r(s);
  auto c = r.certificate();
  r.finish();
  return c;
}

}  // namespace dpdeg

// Command-line front end: one subcommand per library operation.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dpdeg/dpdeg.hpp"

using namespace dpdeg;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kInternal = 2, kBudget = 3 };

std::string list_str(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string paren(const std::vector<int>& v) { return "(" + list_str(v) + ")"; }

struct Out {
  bool machine = false;
  std::ostream& os = std::cout;

  void kv(const std::string& k, const std::string& v) const { os << k << '=' << v << '\n'; }
  void kv(const std::string& k, long long v) const { kv(k, std::to_string(v)); }
  void flag(const std::string& k, bool b) const { kv(k, b ? "true" : "false"); }
};

DigraphProperty property_from(const std::string& name) { return builtin(name); }

void emit_dot(const std::string& path, const Cover& c, const VertexFunction* f) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  write_dot(out, c, f);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadParameter, "expected a comma-separated integer list, got '" + s + "'");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_check(const Out& out, const std::string& path, const std::string& dot) {
  auto doc = read_document(path);
  for (std::size_t i = 0; i < doc.digraphs.size(); ++i) {
    const auto& [name, d] = doc.digraphs[i];
    if (out.machine) {
      std::string p = "digraph[" + std::to_string(i) + "].";
      out.kv(p + "name", name);
      out.kv(p + "vertices", d.order());
      out.kv(p + "arcs", static_cast<long long>(d.arc_count()));
    } else {
      out.os << "OK digraph " << name << " n=" << d.order() << " arcs=" << d.arc_count() << '\n';
    }
  }
  for (std::size_t i = 0; i < doc.covers.size(); ++i) {
    const auto& nc = doc.covers[i];
    auto sat = saturation_and_uniformity(nc.cover);
    std::string uni = sat.uniform_r ? std::to_string(*sat.uniform_r) : "none";
    std::optional<Feasibility> fe;
    if (nc.f) fe = is_degree_feasible(Configuration(nc.cover, *nc.f));
    if (out.machine) {
      std::string p = "cover[" + std::to_string(i) + "].";
      out.kv(p + "name", nc.name);
      out.kv(p + "base", nc.base);
      out.kv(p + "colors", nc.cover.color_count());
      out.flag(p + "saturated", sat.saturated);
      out.kv(p + "uniform", uni);
      if (fe) {
        out.flag(p + "feasible", fe->feasible);
        if (fe->violator) out.kv(p + "violator", *fe->violator);
      }
    } else {
      out.os << "OK " << (nc.f ? "config " : "cover ") << nc.name << " colors=" << nc.cover.color_count()
             << " saturated=" << (sat.saturated ? "yes" : "no") << " uniform=" << uni;
      if (fe) {
        out.os << " feasible=" << (fe->feasible ? "yes" : "no");
        if (fe->violator) out.os << " violator=" << *fe->violator;
      }
      out.os << '\n';
    }
  }
  if (!doc.covers.empty()) {
    const auto& nc = doc.covers.front();
    emit_dot(dot, nc.cover, nc.f ? &*nc.f : nullptr);
  }
  return kOk;
}

void print_coloring(const Out& out, const Coloring& c) {
  if (out.machine) {
    out.kv("verdict", "colorable");
    out.kv("transversal", list_str(c.transversal));
    out.kv("order", list_str(c.order));
  } else {
    out.os << "COLORABLE T=" << paren(c.transversal) << " order=" << paren(c.order) << '\n';
  }
}

int cmd_solve(const Out& out, const std::string& path, bool no_fallback, std::uint64_t budget, const std::string& dot) {
  auto k = first_configuration(read_document(path));
  emit_dot(dot, k.cover(), &k.f());
  SolveOptions opt;
  if (no_fallback) opt.fallback = false;
  opt.budget = budget;
  SolveStats st;
  auto v = solve(k, opt, &st);
  if (!verify(k, v)) throw Error(ErrorCode::InternalInvariant, "verdict failed verification");
  if (v.colored()) {
    print_coloring(out, v.coloring);
  } else if (out.machine) {
    out.kv("verdict", "constructible");
    out.kv("certificate", to_sexpr(v.certificate));
  } else {
    out.os << "CONSTRUCTIBLE " << to_sexpr(v.certificate) << '\n';
  }
  if (out.machine) {
    out.kv("calls", static_cast<long long>(st.calls));
    out.kv("work", static_cast<long long>(st.work));
    out.flag("fallback", st.fallback_used);
  }
  return kOk;
}

int cmd_oracle(const Out& out, const std::string& path, std::uint64_t budget, const std::string& dot) {
  auto k = first_configuration(read_document(path));
  emit_dot(dot, k.cover(), &k.f());
  auto c = brute_force(k, {budget, false});
  if (c)
    print_coloring(out, *c);
  else if (out.machine)
    out.kv("verdict", "uncolorable");
  else
    out.os << "UNCOLORABLE\n";
  return kOk;
}

int cmd_recognize(const Out& out, const std::string& path, const std::string& dot) {
  auto k = first_configuration(read_document(path));
  emit_dot(dot, k.cover(), &k.f());
  auto cert = recognize(k);
  if (cert && !verify_certificate(k, *cert))
    throw Error(ErrorCode::InternalInvariant, "recognized certificate failed verification");
  if (out.machine) {
    out.flag("constructible", cert.has_value());
    if (cert) out.kv("certificate", to_sexpr(*cert));
  } else {
    out.os << (cert ? to_sexpr(*cert) : "NOT-CONSTRUCTIBLE") << '\n';
  }
  return kOk;
}

struct GenArgs {
  std::string family;
  int n = 0;
  std::string parts = "1";
  int r = 1;
  bool twist = false;
  std::uint64_t seed = 1;
  bool shuffle = false;
  std::string digraph_path;
  int fibre = 1;
  std::string inputs[2];
  int v1 = 0, v2 = 0;
  std::string pi;
  std::string name = "gen";
};

int cmd_gen(const Out& out, const GenArgs& a) {
  std::mt19937_64 rng(a.seed);
  Configuration k;
  if (a.family == "m") {
    auto d = first_digraph(read_document(a.digraph_path));
    std::vector<int> sizes(d.order(), a.fibre), chosen(d.order(), 0);
    if (a.shuffle)
      for (int& c : chosen) c = static_cast<int>(rng() % static_cast<std::uint64_t>(a.fibre));
    k = gen_m(d, sizes, chosen);
  } else if (a.family == "k") {
    std::vector<std::vector<int>> perms;
    if (a.shuffle)
      for (int v = 0; v < a.n; ++v) {
        std::vector<int> p(a.r);
        for (int i = 0; i < a.r; ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        perms.push_back(p);
      }
    k = gen_k(a.n, parse_int_list(a.parts), a.r, perms);
  } else if (a.family == "c-odd" || a.family == "c-even") {
    k = gen_c(a.n, a.family == "c-odd" ? Parity::Odd : Parity::Even, a.twist);
  } else if (a.family == "a") {
    k = gen_a(a.n, a.twist);
  } else if (a.family == "merge") {
    auto k1 = first_configuration(read_document(a.inputs[0]));
    auto k2 = first_configuration(read_document(a.inputs[1]));
    k = merge(k1, a.v1, k2, a.v2, a.pi.empty() ? std::vector<int>{} : parse_int_list(a.pi));
  } else {
    throw Error(ErrorCode::BadParameter, "unknown family '" + a.family + "'");
  }
  write_configuration(out.os, a.name, k);
  return kOk;
}

int cmd_chi(const Out& out, const std::string& path, const std::string& prop, const std::string& variant,
            std::optional<int> k) {
  auto d = first_digraph(read_document(path));
  auto p = property_from(prop);
  auto var = parse_variant(variant);
  if (k) {
    bool ok = chi_at_most(d, p, var, *k);
    if (out.machine) {
      out.kv("property", p.name());
      out.kv("variant", to_string(var));
      out.kv("k", *k);
      out.flag("at_most_k", ok);
    } else {
      out.os << "at_most_" << *k << '=' << (ok ? "true" : "false") << '\n';
    }
    return kOk;
  }
  int value = chi(d, p, var);
  if (out.machine) {
    out.kv("property", p.name());
    out.kv("variant", to_string(var));
  }
  out.kv("chi", value);
  return kOk;
}

int cmd_critical(const Out& out, const std::string& path, const std::string& prop, const std::string& variant) {
  auto d = first_digraph(read_document(path));
  auto p = property_from(prop);
  auto var = parse_variant(variant);
  auto c = is_critical(d, p, var);
  auto sub = critical_subdigraph(d, p, var);
  if (out.machine) {
    out.flag("critical", c.critical);
    out.kv("value", c.value);
    out.kv("subdigraph", list_str(sub.vertices));
  } else {
    out.os << (c.critical ? "critical" : "not critical") << " value=" << c.value
           << " subdigraph=" << paren(sub.vertices) << '\n';
  }
  return kOk;
}

int cmd_critical_cover(const Out& out, const std::string& path, const std::string& prop, int k) {
  auto doc = read_document(path);
  auto d = first_digraph(doc);
  auto p = property_from(prop);
  auto c = find_critical_cover(d, p, k);
  if (out.machine) {
    out.flag("found", c.has_value());
    if (c) {
      for (int v = 0; v < c->vertex_count(); ++v) out.kv("fibre." + std::to_string(v), list_str(c->fibre(v)));
      std::string arcs;
      for (auto [x, y] : c->h().arcs()) arcs += (arcs.empty() ? "" : " ") + std::to_string(x) + ">" + std::to_string(y);
      out.kv("harcs", arcs);
    }
    return kOk;
  }
  if (!c) {
    out.os << "NONE\n";
    return kOk;
  }
  const std::string& base = doc.digraphs.front().name;
  write_digraph(out.os, base, d);
  write_cover(out.os, "critical", base, *c);
  return kOk;
}

int cmd_blocks(const Out& out, const std::string& path, const std::string& prop, const std::string& mode,
               const std::string& dot) {
  auto doc = read_document(path);
  if (doc.covers.empty()) throw Error(ErrorCode::ParseError, "no cover in input");
  const auto& nc = doc.covers.front();
  emit_dot(dot, nc.cover, nc.f ? &*nc.f : nullptr);
  auto p = property_from(prop);
  CoverMode m;
  if (mode == "dp")
    m = CoverMode::Dp;
  else if (mode == "list")
    m = CoverMode::List;
  else
    throw Error(ErrorCode::BadParameter, "unknown mode '" + mode + "'");
  auto rep = check_block_structure(nc.cover.base(), nc.cover, p, m);
  if (out.machine) {
    out.kv("low", list_str(rep.report.low_vertices));
    for (std::size_t i = 0; i < rep.report.blocks.size(); ++i) {
      const auto& b = rep.report.blocks[i];
      std::string pre = "block[" + std::to_string(i) + "].";
      out.kv(pre + "vertices", list_str(b.vertices));
      out.kv(pre + "family", b.tag.str());
      out.kv(pre + "dibrick", b.dibrick ? to_string(*b.dibrick) : "none");
    }
    out.kv("violations", static_cast<long long>(rep.violations.size()));
  } else {
    out.os << "low=" << paren(rep.report.low_vertices) << '\n';
    for (const auto& b : rep.report.blocks)
      out.os << "block " << paren(b.vertices) << ' ' << b.tag.str() << " dibrick="
             << (b.dibrick ? to_string(*b.dibrick) : "none") << '\n';
    out.os << "violations=" << rep.violations.size() << '\n';
  }
  return rep.violations.empty() ? kOk : kInternal;
}

int cmd_classify(const Out& out, const std::string& path, const std::string& prop) {
  auto d = first_digraph(read_document(path));
  auto tag = classify(d);
  auto bd = blocks(d);
  auto eu = eulerian_diregular(d);
  std::vector<std::string> bl;
  for (const auto& b : bd.blocks) bl.push_back(paren(b));
  std::string blocks_s;
  for (const auto& s : bl) blocks_s += (blocks_s.empty() ? "" : " ") + s;
  std::optional<BrooksClass> bc;
  if (!prop.empty()) bc = brooks_classify(d, property_from(prop));
  if (out.machine) {
    out.kv("family", tag.str());
    out.kv("blocks", blocks_s);
    out.kv("cut_vertices", list_str(bd.cut_vertices));
    out.flag("eulerian", eu.eulerian);
    out.kv("diregular", eu.diregular_r ? std::to_string(*eu.diregular_r) : "none");
    if (bc) {
      out.kv("bound", bc->bound);
      out.kv("exceptional", bc->exceptional ? to_string(*bc->exceptional) : "none");
    }
  } else {
    out.os << tag.str() << '\n';
    out.os << "blocks=" << blocks_s << " cut=" << paren(bd.cut_vertices) << '\n';
    out.os << "eulerian=" << (eu.eulerian ? "yes" : "no")
           << " diregular=" << (eu.diregular_r ? std::to_string(*eu.diregular_r) : "none") << '\n';
    if (bc)
      out.os << "bound=" << bc->bound << " exceptional=" << (bc->exceptional ? to_string(*bc->exceptional) : "none")
             << '\n';
  }
  return kOk;
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InternalInvariant: return kInternal;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::ScaleCapExceeded: return kBudget;
    default: return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variable-degeneracy DP-coloring of digraphs"};
  app.set_version_flag("--version", std::string(version));
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human", dot;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--emit-dot", dot, "Write H as DOT to this path");

  std::function<int(const Out&)> run;
  std::string input, prop = "ad", variant = "plain", mode = "dp";
  std::uint64_t budget = 50'000'000;
  bool no_fallback = false;
  std::optional<int> k;

  auto* check = app.add_subcommand("check", "Validate a digraph, cover or configuration file");
  check->add_option("file", input)->required();
  check->callback([&] { run = [&](const Out& o) { return cmd_check(o, input, dot); }; });

  auto* solve_cmd = app.add_subcommand("solve", "Color a configuration or certify it constructible");
  solve_cmd->add_option("file", input)->required();
  solve_cmd->add_flag("--no-fallback", no_fallback, "Never fall back to exhaustive search");
  solve_cmd->add_option("--budget", budget, "Node budget for exhaustive search");
  solve_cmd->callback([&] { run = [&](const Out& o) { return cmd_solve(o, input, no_fallback, budget, dot); }; });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive colorability check");
  oracle->add_option("file", input)->required();
  oracle->add_option("--budget", budget, "Node budget");
  oracle->callback([&] { run = [&](const Out& o) { return cmd_oracle(o, input, budget, dot); }; });

  auto* rec = app.add_subcommand("recognize", "Certificate of constructibility, if any");
  rec->add_option("file", input)->required();
  rec->callback([&] { run = [&](const Out& o) { return cmd_recognize(o, input, dot); }; });

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Emit a constructible configuration");
  gen->add_option("family", ga.family, "m | k | c-odd | c-even | a | merge")
      ->required()
      ->check(CLI::IsMember({"m", "k", "c-odd", "c-even", "a", "merge"}));
  gen->add_option("inputs", ga.inputs[0], "m: base digraph file; merge: first configuration");
  gen->add_option("second", ga.inputs[1], "merge: second configuration");
  gen->add_option("--n", ga.n, "Order of the base digraph");
  gen->add_option("--parts", ga.parts, "k: comma-separated parts summing to n-1");
  gen->add_option("--r", ga.r, "k: colors per fibre");
  gen->add_option("--fibre", ga.fibre, "m: colors per fibre");
  gen->add_flag("--twist", ga.twist, "c/a: swap the layers on part of the fibres");
  gen->add_flag("--shuffle", ga.shuffle, "m/k: randomise color positions using --seed");
  gen->add_option("--seed", ga.seed, "Seed for --shuffle");
  gen->add_option("--v1", ga.v1, "merge: vertex of the first configuration");
  gen->add_option("--v2", ga.v2, "merge: vertex of the second configuration");
  gen->add_option("--pi", ga.pi, "merge: comma-separated bijection between the hinge fibres");
  gen->add_option("--name", ga.name, "Name of the emitted blocks");
  gen->callback([&] {
    if (ga.family == "m") ga.digraph_path = ga.inputs[0];
    run = [&](const Out& o) { return cmd_gen(o, ga); };
  });

  auto* chi_cmd = app.add_subcommand("chi", "Dichromatic-type parameter of a digraph");
  chi_cmd->add_option("file", input)->required();
  chi_cmd->add_option("--property", prop, "ad | sd:m");
  chi_cmd->add_option("--variant", variant, "plain | list | dp");
  chi_cmd->add_option("--k", k, "Only decide whether the value is at most k");
  chi_cmd->callback([&] { run = [&](const Out& o) { return cmd_chi(o, input, prop, variant, k); }; });

  auto* crit = app.add_subcommand("critical", "Criticality and a smallest critical subdigraph");
  crit->add_option("file", input)->required();
  crit->add_option("--property", prop, "ad | sd:m");
  crit->add_option("--variant", variant, "plain | list | dp");
  crit->callback([&] { run = [&](const Out& o) { return cmd_critical(o, input, prop, variant); }; });

  int cover_k = 1;
  auto* cc = app.add_subcommand("critical-cover", "Search for a critical k-uniform cover");
  cc->add_option("file", input)->required();
  cc->add_option("--property", prop, "ad | sd:m");
  cc->add_option("--k", cover_k, "Fibre size")->required();
  cc->callback([&] { run = [&](const Out& o) { return cmd_critical_cover(o, input, prop, cover_k); }; });

  auto* blk = app.add_subcommand("blocks", "Low-vertex block structure of a critical cover");
  blk->add_option("file", input)->required();
  blk->add_option("--property", prop, "ad | sd:m");
  blk->add_option("--mode", mode, "dp | list");
  blk->callback([&] { run = [&](const Out& o) { return cmd_blocks(o, input, prop, mode, dot); }; });

  std::string brooks_prop;
  auto* cls = app.add_subcommand("classify", "Family, blocks and Brooks-type classification of a digraph");
  cls->add_option("file", input)->required();
  cls->add_option("--property", brooks_prop, "Also classify against ad | sd:m");
  cls->callback([&] { run = [&](const Out& o) { return cmd_classify(o, input, brooks_prop); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  Out out{format == "machine", std::cout};
  try {
    if (out.machine) out.kv("version", version);
    return run(out);
  } catch (const Error& e) {
    std::cerr << e.brief() << '\n';
    if (!e.detail().empty()) std::cerr << e.detail() << '\n';
    return exit_code(e.code());
  }
}

// Copyright 2026 The cgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgame/reductions.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace cgame {

namespace {

std::string twin_name(int clause, int literal, bool second) {
  return std::string(second ? "l''{" : "l'{") + std::to_string(clause) + "," +
         std::to_string(literal) + "}";
}

std::string padding_name(int clause) { return "L{" + std::to_string(clause) + "}"; }
std::string var_name(int i) { return "x#" + std::to_string(i); }
std::string pendant_name(int i) { return "xbar#" + std::to_string(i); }

void add_gadget_steps(GraphSpec& spec, GadgetKind kind, int k, GadgetOptions options) {
  spec.add(build::AddVertex{"s"})
      .add(build::AddVertex{"w"})
      .add(build::AddVertex{"y"})
      .add(build::AddClique{k, "K"});
  if (kind == GadgetKind::kF1) {
    spec.add(build::AddIndependentSet{k + 3, "Q"})
        .add(build::AddEdge{"s", "w"})
        .add(build::Join{"s", "K"})
        .add(build::Join{"w", "K"})
        .add(build::Join{"y", "K"})
        .add(build::Join{"y", "Q"});
  } else {
    spec.add(build::Join{"s", "K"})
        .add(build::Join{"y", "K"})
        .add(build::AddEdge{"w", "y"});
    if (options.f3_w_joins_k) spec.add(build::Join{"w", "K"});
  }
}

int max_width(const PosFormula& f) {
  int out = 0;
  for (const auto& c : f.clauses) out = std::max(out, static_cast<int>(c.size()));
  return out;
}

// Shared by the two formula reductions.
Instance build_formula_instance(const PosFormula& f, InstanceKind kind,
                                ReductionOptions options) {
  const FormulaKind expected =
      kind == InstanceKind::kGb ? FormulaKind::kDnf : FormulaKind::kCnf;
  if (f.kind != expected) {
    throw InstanceError(kind == InstanceKind::kGb
                            ? "the coloring-game reduction takes a DNF formula"
                            : "the greedy-game reduction takes a CNF formula");
  }
  if (max_width(f) > kWidthCap) {
    throw InstanceError("clause width exceeds " + std::to_string(kWidthCap));
  }
  if (f.clauses.empty()) throw InstanceError("formula has no clauses");

  const int faithful_chi = f.num_clauses() + 3 * f.num_vars + 25;
  const int chi = options.scale_chi.value_or(faithful_chi);
  if (chi < 2 * (max_width(f) + 1) + 1) {
    throw InstanceError("chromatic number " + std::to_string(chi) +
                        " leaves no room for the padding cliques");
  }

  GraphSpec spec;
  if (kind == InstanceKind::kGb) {
    add_gadget_steps(spec, GadgetKind::kF1, chi - 2, options.gadget);
  } else {
    add_gadget_steps(spec, GadgetKind::kF3, chi - 1, options.gadget);
  }
  spec.add(build::AddIndependentSet{f.num_vars, "x"});
  if (kind == InstanceKind::kGreedy) {
    for (int i = 1; i <= f.num_vars; ++i) {
      spec.add(build::AddPendant{var_name(i), pendant_name(i)});
    }
  }
  for (int j = 1; j <= f.num_clauses(); ++j) {
    const auto& clause = f.clauses[j - 1];
    const int p = static_cast<int>(clause.size());
    for (int k = 0; k <= p; ++k) spec.add(build::AddVertex{twin_name(j, k, false)});
    for (int a = 0; a <= p; ++a) {
      for (int b = a + 1; b <= p; ++b) {
        spec.add(build::AddEdge{twin_name(j, a, false), twin_name(j, b, false)});
      }
    }
    spec.add(build::AddClique{chi - 2 * (p + 1), padding_name(j)});
    for (int k = 0; k <= p; ++k) {
      spec.add(build::Join{twin_name(j, k, false), padding_name(j)});
    }
    spec.add(build::Join{"s", padding_name(j)});
    spec.add(build::AddEdge{twin_name(j, 0, false), "y"});
    for (int k = 1; k <= p; ++k) {
      spec.add(build::AddEdge{twin_name(j, k, false), var_name(clause[k - 1])});
    }
    for (int k = 0; k <= p; ++k) {
      spec.add(build::SplitTrueTwin{twin_name(j, k, false), twin_name(j, k, true)});
    }
  }

  Instance inst;
  inst.graph = assemble(spec);
  inst.kind = kind;
  inst.chi = chi;
  inst.faithful = !options.scale_chi || *options.scale_chi == faithful_chi;
  inst.formula = f;
  for (int j = 1; j <= f.num_clauses(); ++j) {
    std::vector<Vertex> clique;
    const int p = static_cast<int>(f.clauses[j - 1].size());
    for (int k = 0; k <= p; ++k) {
      clique.push_back(inst.graph.vertex(twin_name(j, k, false)));
      clique.push_back(inst.graph.vertex(twin_name(j, k, true)));
    }
    const auto& pad = inst.graph.group(padding_name(j));
    clique.insert(clique.end(), pad.begin(), pad.end());
    inst.conjunction_cliques.push_back(std::move(clique));
  }
  return inst;
}

}  // namespace

GraphSpec gadget_spec(GadgetKind kind, int k, GadgetOptions options) {
  if (k < 1) throw InstanceError("gadget clique size must be >= 1");
  GraphSpec spec;
  add_gadget_steps(spec, kind, k, options);
  return spec;
}

Graph build_gadget(GadgetKind kind, int k, GadgetOptions options) {
  return assemble(gadget_spec(kind, k, options));
}

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kGb: return "gb";
    case InstanceKind::kGreedy: return "greedy";
    case InstanceKind::kConnected: return "connected";
  }
  return "?";
}

Instance build_gb_instance(const PosFormula& f, ReductionOptions options) {
  return build_formula_instance(f, InstanceKind::kGb, options);
}

Instance build_greedy_instance(const PosFormula& f, ReductionOptions options) {
  return build_formula_instance(f, InstanceKind::kGreedy, options);
}

Instance build_connected_instance(const Graph& g, int chi_g,
                                  const Coloring& witness) {
  const int n = g.num_vertices();
  if (n % 2 == 0) throw InstanceError("input graph must have an odd number of vertices");
  if (!g.connected()) throw InstanceError("input graph must be connected");
  if (chi_g < 1) throw InstanceError("chromatic number must be >= 1");
  if (!is_proper(g, witness, chi_g)) {
    throw InstanceError("witness is not a proper " + std::to_string(chi_g) + "-coloring");
  }
  bool certified = false;
  if (n <= kDefaultExactLimit) {
    const int exact = chromatic_number_exact(g);
    if (exact != chi_g) {
      throw InstanceError("declared chromatic number " + std::to_string(chi_g) +
                          " but the graph needs " + std::to_string(exact));
    }
    certified = true;
  }

  std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
  LabelMap labels = g.labels();
  std::vector<Vertex> base(n);
  for (Vertex v = 0; v < n; ++v) base[v] = v;
  labels["G"] = base;
  const Vertex y1 = n;
  const Vertex y2 = n + 1;
  const Vertex s = n + 2;
  std::vector<Vertex> clique;
  for (int i = 0; i < chi_g; ++i) clique.push_back(n + 3 + i);
  int total = n + 3 + chi_g;
  labels["y1"] = {y1};
  labels["y2"] = {y2};
  labels["s"] = {s};
  labels["K"] = clique;
  edges.emplace_back(s, y1);
  edges.emplace_back(s, y2);
  for (std::size_t a = 0; a < clique.size(); ++a) {
    edges.emplace_back(y1, clique[a]);
    edges.emplace_back(y2, clique[a]);
    for (std::size_t b = a + 1; b < clique.size(); ++b) {
      edges.emplace_back(clique[a], clique[b]);
    }
  }
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(s, v);
  if (chi_g % 2 == 1) {
    const Vertex p = total++;
    labels["p"] = {p};
    edges.emplace_back(y2, p);
  }

  Instance inst;
  inst.graph = Graph(total, edges, std::move(labels));
  inst.kind = InstanceKind::kConnected;
  inst.chi = chi_g + 1;
  inst.certified = certified;
  inst.base_graph = g;
  inst.base_chi = chi_g;
  inst.base_witness = witness;
  return inst;
}

Coloring witness_coloring(const Instance& inst) {
  const Graph& g = inst.graph;
  Coloring c(g.num_vertices());
  const int chi = inst.chi;
  auto paint = [&](const std::string& group, Color color) {
    for (Vertex v : g.group(group)) c.set(v, color);
  };
  auto paint_range = [&](const std::string& group, Color first) {
    Color color = first;
    for (Vertex v : g.group(group)) c.set(v, color++);
  };

  if (inst.kind == InstanceKind::kConnected) {
    const int base_n = inst.base_graph->num_vertices();
    for (Vertex v = 0; v < base_n; ++v) c.set(v, inst.base_witness[v]);
    paint_range("K", 2);
    paint("y1", 1);
    paint("y2", 1);
    paint("s", inst.base_chi + 1);
    if (g.has_group("p")) paint("p", 2);
    return c;
  }

  const PosFormula& f = *inst.formula;
  if (inst.kind == InstanceKind::kGb) {
    paint("s", 1);
    paint("Q", 1);
    paint_range("K", 2);
    paint("w", chi);
    paint("y", chi);
    paint("x", chi);
    for (int j = 1; j <= f.num_clauses(); ++j) {
      const int p = static_cast<int>(f.clauses[j - 1].size());
      for (int k = 0; k <= p; ++k) {
        c.set(g.vertex(twin_name(j, k, false)), 2 * k + 1);
        c.set(g.vertex(twin_name(j, k, true)), 2 * k + 2);
      }
      paint_range(padding_name(j), 2 * p + 3);
    }
    return c;
  }

  // Greedy: s and y share color 1, so color 1 goes to a literal twin in
  // every conjunction clique and the l_{j,0} twins come after the literals.
  paint("s", 1);
  paint("y", 1);
  paint("w", 2);
  paint_range("K", 2);
  paint("x", chi);
  for (int i = 1; i <= f.num_vars; ++i) c.set(g.vertex(pendant_name(i)), 1);
  for (int j = 1; j <= f.num_clauses(); ++j) {
    const int p = static_cast<int>(f.clauses[j - 1].size());
    for (int k = 1; k <= p; ++k) {
      c.set(g.vertex(twin_name(j, k, false)), 2 * k - 1);
      c.set(g.vertex(twin_name(j, k, true)), 2 * k);
    }
    c.set(g.vertex(twin_name(j, 0, false)), 2 * p + 1);
    c.set(g.vertex(twin_name(j, 0, true)), 2 * p + 2);
    paint_range(padding_name(j), 2 * p + 3);
  }
  return c;
}

std::vector<Vertex> witness_clique(const Instance& inst) {
  if (inst.kind == InstanceKind::kConnected) {
    std::vector<Vertex> out = inst.graph.group("K");
    out.push_back(inst.graph.vertex("y1"));
    return out;
  }
  return inst.conjunction_cliques.front();
}

void write_instance(std::ostream& out, const Instance& inst) {
  if (!inst.faithful) out << "# scale override: fidelity void\n";
  if (!inst.certified) out << "# chromatic number of the input graph uncertified\n";
  write_graph(out, inst.graph);
  out << "chi " << inst.chi << '\n';
  const Coloring c = witness_coloring(inst);
  for (Vertex v = 0; v < c.size(); ++v) {
    out << "witness-color " << v << ' ' << c[v] << '\n';
  }
  out << "witness-clique";
  for (Vertex v : witness_clique(inst)) out << ' ' << v;
  out << '\n';
}

Certificate read_certificate(std::istream& in) {
  auto parsed = parse_graph_file(in, true);
  Certificate cert;
  cert.graph = std::move(parsed.graph);
  cert.coloring = Coloring(cert.graph.num_vertices());
  const int n = cert.graph.num_vertices();
  for (const auto& [line_no, line] : parsed.extra_lines) {
    std::istringstream tokens(line);
    std::string keyword;
    tokens >> keyword;
    if (keyword == "chi") {
      if (!(tokens >> cert.chi)) throw ParseError(line_no, "bad chi line");
    } else if (keyword == "witness-color") {
      int v = -1;
      int color = 0;
      if (!(tokens >> v >> color) || v < 0 || v >= n) {
        throw ParseError(line_no, "bad witness-color line");
      }
      cert.coloring.set(v, color);
    } else if (keyword == "witness-clique") {
      for (int v; tokens >> v;) {
        if (v < 0 || v >= n) throw ParseError(line_no, "bad clique vertex");
        cert.clique.push_back(v);
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  return cert;
}

}  // namespace cgame

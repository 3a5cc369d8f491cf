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

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "cgame/reductions.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cgame;

namespace {

const char* kExampleDnf = "dnf 5 4\n1 2 5\n1 3 5\n2 4 5\n3 4 5\n";
const char* kExampleCnf = "cnf 4 4\n1 2\n1 3\n2 4\n3 4\n";

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, e);
}

int colors_used(const Coloring& c) {
  std::set<Color> s(c.values().begin(), c.values().end());
  return static_cast<int>(s.size());
}

void check_certificate(const Instance& inst) {
  const Coloring c = witness_coloring(inst);
  CHECK(is_proper(inst.graph, c, inst.chi));
  CHECK(colors_used(c) == inst.chi);
  const auto clique = witness_clique(inst);
  CHECK(static_cast<int>(clique.size()) == inst.chi);
  CHECK(verify_clique(inst.graph, clique));
}

void check_formula_instance(const Instance& inst) {
  const PosFormula& f = *inst.formula;
  const Graph& g = inst.graph;
  const int chi = f.num_clauses() + 3 * f.num_vars + 25;
  CHECK(inst.chi == chi);
  for (int j = 1; j <= f.num_clauses(); ++j) {
    const int p = static_cast<int>(f.clauses[j - 1].size());
    CHECK(static_cast<int>(g.group("L{" + std::to_string(j) + "}").size()) == chi - 2 * (p + 1));
    const auto& clique = inst.conjunction_cliques[j - 1];
    CHECK(static_cast<int>(clique.size()) == chi);
    CHECK(verify_clique(g, clique));
    std::set<Vertex> inside(clique.begin(), clique.end());
    for (Vertex v : clique) {
      int outside = 0;
      for (Vertex u : g.neighbors(v)) outside += inside.count(u) ? 0 : 1;
      CHECK(outside == 1);
      CHECK(g.degree(v) == chi);
    }
  }
  check_certificate(inst);
}

PosFormula random_formula(FormulaKind kind, std::mt19937_64& rng) {
  const int n = 1 + static_cast<int>(rng() % 6);
  const int m = 1 + static_cast<int>(rng() % 6);
  std::vector<std::vector<int>> clauses;
  for (int j = 0; j < m; ++j) {
    std::vector<int> cl;
    for (int x = 1; x <= n; ++x) {
      if (rng() % 2) cl.push_back(x);
    }
    if (cl.empty()) cl.push_back(1 + static_cast<int>(rng() % n));
    clauses.push_back(cl);
  }
  return make_formula(kind, n, clauses);
}

}  // namespace

TEST_CASE("gadgets") {
  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  CHECK(f1.num_vertices() == 10);
  CHECK(f1.group("K").size() == 2);
  CHECK(f1.group("Q").size() == 5);

  Graph f3 = build_gadget(GadgetKind::kF3, 3);
  CHECK(f3.num_vertices() == 6);
  std::vector<Vertex> ks = f3.group("K");
  ks.push_back(f3.vertex("s"));
  CHECK(verify_clique(f3, ks));
  CHECK(chromatic_number_exact(f3) == 4);
  CHECK(f3.adjacent(f3.vertex("w"), f3.vertex("y")));
  CHECK_FALSE(f3.adjacent(f3.vertex("w"), f3.vertex("K#1")));
  GadgetOptions joined;
  joined.f3_w_joins_k = true;
  CHECK(build_gadget(GadgetKind::kF3, 3, joined).adjacent(3, 1));

  Graph big = build_gadget(GadgetKind::kF1, 4 + 3 * 5 + 23);
  CHECK(big.group("K").size() == 42);
  CHECK(big.group("Q").size() == 45);
  CHECK_THROWS_AS(build_gadget(GadgetKind::kF1, 0), InstanceError);
}

TEST_CASE("coloring-game instance for the DNF example") {
  Instance inst = build_gb_instance(parse_formula(kExampleDnf));
  const Graph& g = inst.graph;
  CHECK(inst.chi == 44);
  CHECK(inst.faithful);
  CHECK(g.group("K").size() == 42);
  CHECK(g.group("Q").size() == 45);
  for (int j = 1; j <= 4; ++j) CHECK(g.group("L{" + std::to_string(j) + "}").size() == 36);
  CHECK(g.num_vertices() == 271);
  check_formula_instance(inst);
  const Coloring c = witness_coloring(inst);
  CHECK(c[g.vertex("s")] == 1);
  CHECK(c[g.vertex("y")] == 44);
  CHECK(c[g.vertex("l'{1,2}")] == 5);
  CHECK(c[g.vertex("l''{1,2}")] == 6);
}

TEST_CASE("greedy instance for the CNF example") {
  Instance inst = build_greedy_instance(parse_formula(kExampleCnf));
  const Graph& g = inst.graph;
  CHECK(inst.chi == 41);
  CHECK(g.group("K").size() == 40);
  for (int j = 1; j <= 4; ++j) CHECK(g.group("L{" + std::to_string(j) + "}").size() == 35);
  check_formula_instance(inst);
  const Coloring c = witness_coloring(inst);
  for (int i = 1; i <= 4; ++i) {
    const Vertex bar = g.vertex("xbar#" + std::to_string(i));
    const Vertex x = g.vertex("x#" + std::to_string(i));
    CHECK(g.degree(bar) == 1);
    CHECK(g.adjacent(bar, x));
    CHECK(c[bar] == (c[x] != 1 ? 1 : 2));
  }
}

TEST_CASE("formula instance size laws") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 40; ++rep) {
    PosFormula d = random_formula(FormulaKind::kDnf, rng);
    Instance gb = build_gb_instance(d);
    CHECK(static_cast<int>(gb.graph.group("K").size()) ==
          d.num_clauses() + 3 * d.num_vars + 23);
    CHECK(gb.graph.group("Q").size() == gb.graph.group("K").size() + 3);
    check_formula_instance(gb);

    PosFormula c = random_formula(FormulaKind::kCnf, rng);
    Instance gr = build_greedy_instance(c);
    CHECK(static_cast<int>(gr.graph.group("K").size()) ==
          c.num_clauses() + 3 * c.num_vars + 24);
    check_formula_instance(gr);
    for (Vertex x : gr.graph.group("x")) {
      int pendants = 0;
      for (Vertex u : gr.graph.neighbors(x)) pendants += gr.graph.degree(u) == 1 ? 1 : 0;
      CHECK(pendants == 1);
    }
  }
}

TEST_CASE("formula reduction errors") {
  CHECK_THROWS_AS(build_gb_instance(parse_formula(kExampleCnf)), InstanceError);
  CHECK_THROWS_AS(build_greedy_instance(parse_formula(kExampleDnf)), InstanceError);
  CHECK_THROWS_AS(build_gb_instance(parse_formula("dnf 12 1\n1 2 3 4 5 6 7 8 9 10 11 12\n")),
                  InstanceError);
  ReductionOptions tiny;
  tiny.scale_chi = 5;
  CHECK_THROWS_AS(build_gb_instance(parse_formula(kExampleDnf), tiny), InstanceError);
}

TEST_CASE("scaled instances are marked") {
  ReductionOptions scaled;
  scaled.scale_chi = 12;
  Instance inst = build_gb_instance(parse_formula(kExampleDnf), scaled);
  CHECK_FALSE(inst.faithful);
  CHECK(inst.chi == 12);
  check_certificate(inst);
  std::ostringstream out;
  write_instance(out, inst);
  CHECK(out.str().find("fidelity void") != std::string::npos);
  Instance g = build_greedy_instance(parse_formula(kExampleCnf), scaled);
  check_certificate(g);
}

TEST_CASE("connected reduction") {
  Graph k3 = complete(3);
  Instance inst = build_connected_instance(k3, 3, Coloring(std::vector<Color>{1, 2, 3}));
  CHECK(inst.graph.num_vertices() == 10);
  CHECK(inst.chi == 4);
  CHECK(inst.certified);
  CHECK(chromatic_number_exact(inst.graph) == 4);
  CHECK(inst.graph.has_group("p"));
  CHECK(inst.graph.connected());
  check_certificate(inst);
  std::vector<Vertex> k2 = inst.graph.group("K");
  k2.push_back(inst.graph.vertex("y2"));
  CHECK(verify_clique(inst.graph, k2));
  CHECK((inst.graph.num_vertices() - 3) % 2 == 1);

  Instance one = build_connected_instance(Graph(1, {}), 1, Coloring(std::vector<Color>{1}));
  CHECK(one.graph.num_vertices() == 6);
  CHECK(one.chi == 2);
  check_certificate(one);

  Graph p3(3, {{0, 1}, {1, 2}});
  Instance even_chi = build_connected_instance(p3, 2, Coloring(std::vector<Color>{1, 2, 1}));
  CHECK_FALSE(even_chi.graph.has_group("p"));
  CHECK((even_chi.graph.num_vertices() - 3) % 2 == 1);
  check_certificate(even_chi);

  CHECK_THROWS_AS(build_connected_instance(Graph(2, {{0, 1}}), 2,
                                           Coloring(std::vector<Color>{1, 2})),
                  InstanceError);
  CHECK_THROWS_AS(build_connected_instance(Graph(3, {{0, 1}}), 2,
                                           Coloring(std::vector<Color>{1, 2, 1})),
                  InstanceError);
  CHECK_THROWS_AS(build_connected_instance(k3, 3, Coloring(std::vector<Color>{1, 2, 2})),
                  InstanceError);
  CHECK_THROWS_AS(build_connected_instance(p3, 3, Coloring(std::vector<Color>{1, 2, 3})),
                  InstanceError);
}

TEST_CASE("connected reduction on random odd graphs") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 1 + 2 * static_cast<int>(rng() % 4);
    Graph g = oracle::random_connected_graph(n, 0.4, rng);
    auto ex = optimal_coloring(g);
    Instance inst = build_connected_instance(g, ex.chromatic_number, ex.coloring);
    CHECK(inst.graph.connected());
    CHECK((inst.graph.num_vertices() - n) % 2 == 1);
    check_certificate(inst);
  }
}

TEST_CASE("certificate round trip") {
  Instance inst = build_gb_instance(parse_formula(kExampleDnf));
  std::ostringstream out;
  write_instance(out, inst);
  std::istringstream in(out.str());
  Certificate cert = read_certificate(in);
  CHECK(cert.graph == inst.graph);
  CHECK(cert.chi == 44);
  CHECK(cert.coloring == witness_coloring(inst));
  CHECK(cert.clique == witness_clique(inst));

  std::ostringstream again;
  write_instance(again, build_gb_instance(parse_formula(kExampleDnf)));
  CHECK(again.str() == out.str());
}

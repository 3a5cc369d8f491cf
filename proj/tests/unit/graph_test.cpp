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

#include <random>
#include <sstream>

#include "cgame/graph.hpp"
#include "cgame/reductions.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace cgame;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph(n, e);
}

}  // namespace

TEST_CASE("graph construction rejects bad edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.num_edges() == 2);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
}

TEST_CASE("assemble: clique, twin and F1") {
  GraphSpec tri;
  tri.add(build::AddClique{3, "T"});
  Graph t = assemble(tri);
  CHECK(t.num_vertices() == 3);
  CHECK(t.num_edges() == 3);

  GraphSpec twin;
  twin.add(build::AddVertex{"a"}).add(build::SplitTrueTwin{"a", "b"});
  Graph tw = assemble(twin);
  CHECK(tw.num_vertices() == 2);
  CHECK(tw.adjacent(tw.vertex("a"), tw.vertex("b")));

  // The F1 drawing at k=2 has 10 vertices; K is a clique, so the edge count
  // is 4k+4 plus the k(k-1)/2 edges inside K.
  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  CHECK(f1.num_vertices() == 10);
  CHECK(f1.num_edges() == 4 * 2 + 4 + 1);
  std::vector<Vertex> sk = {f1.vertex("s"), f1.vertex("w"), f1.vertex("K#1"), f1.vertex("K#2")};
  CHECK(verify_clique(f1, sk));
  CHECK_FALSE(verify_clique(f1, std::vector<Vertex>{f1.vertex("s"), f1.vertex("y")}));
}

TEST_CASE("assemble reports the failing step") {
  GraphSpec spec;
  spec.add(build::AddVertex{"a"}).add(build::AddEdge{"a", "nope"});
  try {
    assemble(spec);
    FAIL("expected SpecError");
  } catch (const SpecError& e) {
    CHECK(e.step() == 1);
  }
}

TEST_CASE("assemble is deterministic") {
  auto spec = gadget_spec(GadgetKind::kF1, 4);
  std::ostringstream a, b;
  write_graph(a, assemble(spec));
  write_graph(b, assemble(spec));
  CHECK(a.str() == b.str());
}

TEST_CASE("split twins share closed neighborhoods") {
  GraphSpec spec;
  spec.add(build::AddClique{3, "T"})
      .add(build::AddVertex{"v"})
      .add(build::AddEdge{"v", "T#1"})
      .add(build::AddEdge{"v", "T#2"})
      .add(build::SplitTrueTwin{"v", "v2"});
  Graph g = assemble(spec);
  const Vertex a = g.vertex("v"), b = g.vertex("v2");
  CHECK(g.adjacent(a, b));
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (u == a || u == b) continue;
    CHECK(g.adjacent(a, u) == g.adjacent(b, u));
  }
}

TEST_CASE("is_proper") {
  Graph k3 = complete(3);
  CHECK(is_proper(k3, Coloring(std::vector<Color>{1, 2, 3}), 3));
  CHECK_FALSE(is_proper(k3, Coloring(std::vector<Color>{1, 2, 2}), 3));
  CHECK_FALSE(is_proper(k3, Coloring(std::vector<Color>{1, 2, 0}), 3));
  CHECK_FALSE(is_proper(k3, Coloring(std::vector<Color>{1, 2, 4}), 3));
}

TEST_CASE("colored_set_connected") {
  Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(colored_set_connected(p3, Coloring(3)));
  CHECK_FALSE(colored_set_connected(p3, Coloring(std::vector<Color>{1, 0, 1})));
  CHECK(colored_set_connected(p3, Coloring(std::vector<Color>{1, 2, 0})));
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number_exact(cycle(5)) == 3);
  CHECK(chromatic_number_exact(complete(4)) == 4);
  Graph f3 = build_gadget(GadgetKind::kF3, 3);
  CHECK(chromatic_number_exact(f3) == 4);
  CHECK(oracle::brute_chromatic(f3) == 4);
  CHECK_THROWS_AS(chromatic_number_exact(complete(17)), GraphTooLarge);
  auto ex = optimal_coloring(cycle(7));
  CHECK(ex.chromatic_number == 3);
  CHECK(is_proper(cycle(7), ex.coloring, 3));
}

TEST_CASE("chromatic number matches enumeration on small graphs") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      Graph g = oracle::random_graph(n, 0.5, rng);
      CAPTURE(n);
      CHECK(chromatic_number_exact(g) == oracle::brute_chromatic(g));
    }
  }
}

TEST_CASE("graph text format round trip") {
  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  std::ostringstream out;
  write_graph(out, f1);
  std::istringstream in(out.str());
  Graph back = parse_graph(in);
  CHECK(back == f1);
}

TEST_CASE("graph parser errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_graph(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("graph 3\nedge 0 1\nedge 1 0\n") == 3);
  CHECK(line_of("graph 3\n# c\nedge 1 1\n") == 3);
  CHECK(line_of("graph 3\nedge 0 5\n") == 2);
  CHECK(line_of("edge 0 1\n") == 1);
  CHECK(line_of("graph 2\nfoo\n") == 2);
  std::istringstream ok("graph 3\n\n# comment\nedge 0 1\nlabel a 2\n");
  Graph g = parse_graph(ok);
  CHECK(g.vertex("a") == 2);
}

TEST_CASE("vertex names resolve both ways") {
  Graph f1 = build_gadget(GadgetKind::kF1, 2);
  CHECK(f1.vertex("s") == 0);
  CHECK(f1.vertex("Q#1") == f1.group("Q")[0]);
  CHECK(f1.vertex("7") == 7);
  CHECK_FALSE(f1.find_vertex("Q#9"));
  for (Vertex v = 0; v < f1.num_vertices(); ++v) {
    CHECK(f1.vertex(f1.vertex_name(v)) == v);
  }
}

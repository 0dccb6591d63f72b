#include <random>

#include "doctest.h"
#include "qgzeta/covering.hpp"
#include "qgzeta/graph.hpp"
#include "qgzeta/random_graphs.hpp"

using namespace qgz;

namespace {

MetricGraph triangle() {
  return build_graph({"v1", "v2", "v3"},
                     {{"e1", "v1", "v2", 1.0, 0.2}, {"e2", "v2", "v3", 1.1, 0.0},
                      {"e3", "v3", "v1", 0.9, -0.4}},
                     {{"v2", cplx(0.5, 0.0)}});
}

}  // namespace

TEST_CASE("triangle structure and arc interleaving") {
  MetricGraph g = triangle();
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.arc_count() == 6);
  CHECK(g.connected());

  for (int e = 0; e < 3; ++e) {
    int f = g.forward_arc(e), r = g.reverse_arc(e);
    CHECK(f == 2 * e);
    CHECK(r == 2 * e + 1);
    CHECK(g.arc(f).inverse == r);
    CHECK(g.arc(r).inverse == f);
    CHECK(g.arc(f).edge == e);
    CHECK(g.arc(f).origin == g.arc(r).terminus);
    CHECK(g.arc(f).terminus == g.arc(r).origin);
    CHECK(g.length(f) == g.length(r));
    CHECK(g.potential(f) == -g.potential(r));
  }
  CHECK(g.arc(0).origin == g.vertex_index("v1"));
  CHECK(g.arc(0).terminus == g.vertex_index("v2"));
  CHECK(g.potential(0) == 0.2);
  CHECK(g.potential(1) == -0.2);
  CHECK(g.arc_name(0) == "e1");
  CHECK(g.arc_name(1) == "e1^-1");
  CHECK(g.edge_id(2) == "e3");
  CHECK(g.lambda(g.vertex_index("v2")) == cplx(0.5, 0.0));
  CHECK(g.lambda(g.vertex_index("v1")) == cplx(0.0, 0.0));
  for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
  CHECK_THROWS_AS(g.vertex_index("nope"), InputError);
}

TEST_CASE("build_graph validation") {
  CHECK_THROWS_AS(build_graph({}, {}), InputError);
  CHECK_THROWS_AS(build_graph({"a", "a"}, {{"e1", "a", "a", 1.0, 0.0}}), InputError);
  CHECK_THROWS_AS(build_graph({"a", "b"}, {{"e1", "a", "c", 1.0, 0.0}}), InputError);
  CHECK_THROWS_AS(build_graph({"a", "b"}, {{"e1", "a", "b", 0.0, 0.0}}), InputError);
  CHECK_THROWS_AS(build_graph({"a", "b"}, {{"e1", "a", "b", -2.0, 0.0}}), InputError);
  CHECK_THROWS_AS(
      build_graph({"a", "b"}, {{"dup", "a", "b", 1.0, 0.0}, {"dup", "b", "a", 1.0, 0.0}}),
      InputError);
  // Disconnected input is rejected by the public builder, allowed by the
  // covering path.
  std::vector<EdgeSpec> split{{"e1", "a", "b", 1.0, 0.0}, {"e2", "c", "d", 1.0, 0.0}};
  CHECK_THROWS_AS(build_graph({"a", "b", "c", "d"}, split), InputError);
  MetricGraph loose = build_graph_impl({"a", "b", "c", "d"}, split, {}, false);
  CHECK_FALSE(loose.connected());
  CHECK(loose.edge_count() == 2);
}

TEST_CASE("loops and parallel edges") {
  MetricGraph g = build_graph({"a", "b"},
                              {{"e1", "a", "b", 1.0, 0.0}, {"e2", "a", "b", 2.0, 0.1},
                               {"loop", "b", "b", 0.7, 0.3}});
  CHECK(g.degree(g.vertex_index("a")) == 2);
  CHECK(g.degree(g.vertex_index("b")) == 4);  // loop counts twice
  int lf = g.forward_arc(2);
  CHECK(g.arc(lf).origin == g.arc(lf).terminus);
  CHECK(g.arc(lf).inverse == g.reverse_arc(2));
}

TEST_CASE("with_uniform_data preserves topology") {
  MetricGraph g = triangle();
  MetricGraph u = with_uniform_data(g, 1.5, 0.25, cplx(0.0, -1.0));
  CHECK(u.vertex_count() == g.vertex_count());
  CHECK(u.edge_count() == g.edge_count());
  for (int a = 0; a < u.arc_count(); ++a) {
    CHECK(u.arc(a).origin == g.arc(a).origin);
    CHECK(u.arc(a).terminus == g.arc(a).terminus);
    CHECK(u.length(a) == 1.5);
    CHECK(u.potential(a) == (a % 2 == 0 ? 0.25 : -0.25));
  }
  for (int v = 0; v < u.vertex_count(); ++v) CHECK(u.lambda(v) == cplx(0.0, -1.0));
}

TEST_CASE("random graphs satisfy the degree sum rule") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 25; ++i) {
    RandomGraphOptions opts;
    opts.force_loop = i % 3 == 0;
    opts.force_multi_edge = i % 4 == 0;
    MetricGraph g = random_connected_graph(rng, opts);
    CHECK(g.connected());
    int dsum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) dsum += g.degree(v);
    CHECK(dsum == g.arc_count());
    for (int a = 0; a < g.arc_count(); ++a) {
      CHECK(g.arc(g.arc(a).inverse).inverse == a);
      CHECK(g.length(a) > 0.0);
    }
  }
}

TEST_CASE("voltage assignments enforce inverse consistency") {
  MetricGraph g = triangle();
  GroupPtr z3 = cyclic_group(3);
  VoltageAssignment va = VoltageAssignment::from_edges(g, z3, {1, 0, 2});
  CHECK(va.voltage(0) == 1);
  CHECK(va.voltage(1) == 2);  // inverse of 1 in Z3
  CHECK(va.voltage(2) == 0);
  CHECK(va.voltage(4) == 2);
  CHECK(va.voltage(5) == 1);

  // Arc-level constructor rejects a pair that breaks alpha(e^-1) = alpha(e)^-1.
  CHECK_THROWS_AS(VoltageAssignment(g, z3, {1, 1, 0, 0, 0, 0}), InputError);
  CHECK_THROWS_AS(VoltageAssignment(g, z3, {1, 2, 0, 0}), InputError);
  CHECK_THROWS_AS(VoltageAssignment::from_edges(g, z3, {5, 0, 0}), InputError);

  VoltageAssignment triv = VoltageAssignment::trivial(g, z3);
  for (int a = 0; a < 6; ++a) CHECK(triv.voltage(a) == 0);
}

TEST_CASE("derived covering of the triangle by a sign voltage") {
  MetricGraph g = triangle();
  GroupPtr z2 = cyclic_group(2);
  VoltageAssignment va = VoltageAssignment::from_edges(g, z2, {1, 0, 0});
  CoveringGraph cover = derived_covering(g, va);

  CHECK(cover.graph.vertex_count() == 6);
  CHECK(cover.graph.edge_count() == 6);
  CHECK(cover.connected);  // the only independent cycle carries net voltage 1

  // Fiber-major labels, lifted arc (e1, fiber 0): (v1,0) -> (v2, 0*alpha).
  CHECK(cover.covering_vertex(0, 0) == 0);
  CHECK(cover.covering_vertex(0, 1) == 3);
  CHECK(cover.graph.vertex_name(cover.covering_vertex(g.vertex_index("v1"), 1)) == "v1@1");
  int lifted = cover.covering_arc(g.forward_arc(0), 0);
  CHECK(cover.graph.arc(lifted).origin == cover.covering_vertex(g.vertex_index("v1"), 0));
  CHECK(cover.graph.arc(lifted).terminus == cover.covering_vertex(g.vertex_index("v2"), 1));
  CHECK(cover.arc_base[lifted] == g.forward_arc(0));
  CHECK(cover.arc_fiber[lifted] == 0);

  // Metric data and couplings are lifted unchanged.
  for (int a = 0; a < cover.graph.arc_count(); ++a) {
    CHECK(cover.graph.length(a) == g.length(cover.arc_base[a]));
    CHECK(cover.graph.potential(a) == g.potential(cover.arc_base[a]));
  }
  for (int v = 0; v < cover.graph.vertex_count(); ++v)
    CHECK(cover.graph.lambda(v) == g.lambda(cover.vertex_base[v]));

  // Projection is a bijection fiber by fiber.
  for (int b = 0; b < g.arc_count(); ++b)
    for (int h = 0; h < 2; ++h) {
      int up = cover.covering_arc(b, h);
      CHECK(cover.arc_base[up] == b);
      CHECK(cover.arc_fiber[up] == h);
    }
}

TEST_CASE("trivial coverings") {
  MetricGraph g = triangle();
  CoveringGraph same = derived_covering(g, VoltageAssignment::trivial(g, cyclic_group(1)));
  CHECK(same.graph.vertex_count() == 3);
  CHECK(same.connected);

  // Zero voltages over Z2 give two disjoint copies; allowed, but flagged.
  CoveringGraph doubled = derived_covering(g, VoltageAssignment::trivial(g, cyclic_group(2)));
  CHECK(doubled.graph.vertex_count() == 6);
  CHECK_FALSE(doubled.connected);
  CHECK_FALSE(doubled.graph.connected());
}

#include <cmath>
#include <random>

#include "doctest.h"
#include "qgzeta/matrix.hpp"
#include "qgzeta/polynomial.hpp"
#include "qgzeta/random_graphs.hpp"
#include "qgzeta/scattering.hpp"

using namespace qgz;

namespace {

MetricGraph single_edge(double length = 1.0, double potential = 0.0) {
  return build_graph({"v1", "v2"}, {{"e1", "v1", "v2", length, potential}});
}

MetricGraph triangle_k3() {
  return build_graph({"v1", "v2", "v3"},
                     {{"e1", "v1", "v2", 1.0, 0.0}, {"e2", "v2", "v3", 1.0, 0.0},
                      {"e3", "v3", "v1", 1.0, 0.0}});
}

MetricGraph tetrahedron(cplx lambda = cplx(0.0, 0.0)) {
  std::map<std::string, cplx> lam;
  for (const char* v : {"a", "b", "c", "d"}) lam[v] = lambda;
  return build_graph({"a", "b", "c", "d"},
                     {{"e1", "a", "b", 1.0, 0.0}, {"e2", "a", "c", 1.1, 0.0},
                      {"e3", "a", "d", 0.9, 0.0}, {"e4", "b", "c", 1.2, 0.0},
                      {"e5", "b", "d", 0.8, 0.0}, {"e6", "c", "d", 1.05, 0.0}},
                     lam);
}

}  // namespace

TEST_CASE("vertex factors") {
  MetricGraph k4 = tetrahedron();
  CHECK(std::abs(vertex_factor(k4, 0, cplx(1.0, 0.0)) - cplx(2.0 / 3.0, 0.0)) < 1e-14);

  MetricGraph k4l = tetrahedron(cplx(1.0, 0.0));
  CHECK(std::abs(vertex_factor(k4l, 0, cplx(1.0, 0.0)) - cplx(0.6, -0.2)) < 1e-14);

  // ik d = lambda is a pole of the factor.
  MetricGraph e = single_edge();
  MetricGraph el = with_uniform_data(e, 1.0, 0.0, cplx(1.0, 0.0));
  CHECK_THROWS_AS(vertex_factor(el, 0, cplx(0.0, -1.0)), SingularParameterError);
}

TEST_CASE("single edge matrices at k = pi") {
  MetricGraph g = single_edge();
  ScatteringSet set = scattering_set(g, cplx(pi, 0.0));
  CHECK(max_abs_diff(set.T, cplx(-1.0, 0.0) * ComplexMatrix::identity(2)) < 1e-14);
  ComplexMatrix swap(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  CHECK(max_abs_diff(set.S, swap) < 1e-14);  // degree-1 Kirchhoff ends reflect with +1
  CHECK(max_abs_diff(set.F, ComplexMatrix::identity(2)) < 1e-14);
  CHECK(max_abs_diff(u_gs(g, cplx(pi, 0.0)), cplx(-1.0, 0.0) * swap) < 1e-14);
}

TEST_CASE("structural identities of the scattering set") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) {
    MetricGraph g = random_connected_graph(rng);
    cplx k(uniform_in(rng, 0.5, 8.0), 0.0);
    ScatteringSet set = scattering_set(g, k);
    int na = g.arc_count();

    CHECK(max_abs_diff(set.J0 * set.J0, ComplexMatrix::identity(na)) == 0.0);
    CHECK(max_abs_diff(set.T, set.J0 * (set.R * set.J0)) == 0.0);
    CHECK(max_abs_diff(set.S, set.F * set.J0) == 0.0);

    // Off-star entries vanish; on-star entries follow the coin formula.
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < na; ++b) {
        if (g.arc(a).origin != g.arc(b).origin)
          CHECK(set.F(a, b) == cplx(0.0, 0.0));
        else
          CHECK(std::abs(set.F(a, b) - (vertex_factor(g, g.arc(a).origin, k) -
                                        (a == b ? 1.0 : 0.0))) < 1e-14);
      }
  }
}

TEST_CASE("triangle vertex scattering is a permutation at Kirchhoff couplings") {
  MetricGraph g = triangle_k3();
  ScatteringSet set = scattering_set(g, cplx(1.7, 0.0));
  // Degree two and lambda zero make x = 1: backtracking is forbidden and the
  // only open channel has amplitude one.
  ComplexMatrix expected(6, 6);
  expected(0, 4) = expected(1, 3) = expected(2, 0) = 1.0;
  expected(3, 5) = expected(4, 2) = expected(5, 1) = 1.0;
  CHECK(max_abs_diff(set.S, expected) < 1e-14);
}

TEST_CASE("grover coin appears at zero coupling") {
  MetricGraph g = tetrahedron();
  cplx k(2.3, 0.0);
  ScatteringSet set = scattering_set(g, k);
  for (int a = 0; a < g.arc_count(); ++a)
    for (int b = 0; b < g.arc_count(); ++b) {
      if (g.arc(a).origin != g.arc(b).origin) continue;
      double want = 2.0 / 3.0 - (a == b ? 1.0 : 0.0);
      CHECK(std::abs(set.F(a, b) - want) < 1e-14);
    }
}

TEST_CASE("entrywise formula for the bond walk operator") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 8; ++i) {
    MetricGraph g = random_connected_graph(rng);
    cplx k(uniform_in(rng, 0.5, 8.0), 0.0);
    ComplexMatrix u = u_gs(g, k);
    const cplx iu(0.0, 1.0);
    for (int a = 0; a < g.arc_count(); ++a) {
      cplx ta = std::exp(iu * cplx(g.length(a), 0.0) * (k - g.potential(a)));
      for (int b = 0; b < g.arc_count(); ++b) {
        cplx want = 0.0;
        if (g.arc(b).terminus == g.arc(a).origin)
          want = ta * (vertex_factor(g, g.arc(a).origin, k) -
                       (g.arc(a).inverse == b ? 1.0 : 0.0));
        CHECK(std::abs(u(a, b) - want) < 1e-13);
      }
    }
  }
}

TEST_CASE("secular determinant matches the direct computation") {
  MetricGraph g = tetrahedron();
  cplx k(1.9, 0.0);
  ComplexMatrix m = ComplexMatrix::identity(g.arc_count());
  m -= u_gs(g, k);
  CHECK(rel_err(secular_det(g, k), determinant(std::move(m))) < 1e-12);
}

TEST_CASE("walk evolution preserves the norm and inverts cleanly") {
  std::mt19937_64 rng(47);
  MetricGraph g = tetrahedron();
  cplx k(3.1, 0.0);

  WalkState state;
  state.amplitudes.assign(g.arc_count(), cplx(0.0, 0.0));
  for (auto& v : state.amplitudes) v = cplx(uniform_in(rng, -1.0, 1.0), uniform_in(rng, -1.0, 1.0));
  double n0 = state.norm();

  WalkState same = walk_evolve(g, k, WalkKind::GS, state, 0);
  for (int a = 0; a < g.arc_count(); ++a) CHECK(same.amplitudes[a] == state.amplitudes[a]);

  WalkState fwd = walk_evolve(g, k, WalkKind::GS, state, 50);
  CHECK(std::abs(fwd.norm() - n0) < 1e-10 * n0);

  // The primed operator is the exact inverse of the bond walk.
  WalkState back = walk_evolve(g, k, WalkKind::Prime, fwd, 50);
  for (int a = 0; a < g.arc_count(); ++a)
    CHECK(std::abs(back.amplitudes[a] - state.amplitudes[a]) < 1e-9);

  for (WalkKind kind : {WalkKind::HKSS, WalkKind::Tilde}) {
    WalkState w = walk_evolve(g, k, kind, state, 15);
    CHECK(std::abs(w.norm() - n0) < 1e-10 * n0);
  }
}

TEST_CASE("the four operators share spectra up to reciprocals") {
  std::mt19937_64 rng(101);
  MetricGraph g = random_connected_graph(rng);
  cplx k(uniform_in(rng, 0.5, 6.0), 0.0);

  std::vector<cplx> sgs = eigenvalues(u_gs(g, k));
  std::vector<cplx> sti = eigenvalues(u_tilde(g, k));
  CHECK(hausdorff_distance(sgs, sti) < 1e-6);

  std::vector<cplx> shk = eigenvalues(u_hkss(g, k));
  std::vector<cplx> recip;
  for (cplx v : sti) recip.push_back(1.0 / v);
  CHECK(hausdorff_distance(shk, recip) < 1e-6);

  std::vector<cplx> spr = eigenvalues(u_prime(g, k));
  CHECK(hausdorff_distance(shk, spr) < 1e-6);
}

TEST_CASE("walk kind names") {
  CHECK(std::string(walk_kind_name(WalkKind::GS)) == "gs");
  CHECK(std::string(walk_kind_name(WalkKind::HKSS)) == "hkss");
  CHECK(std::string(walk_kind_name(WalkKind::Tilde)) == "tilde");
  CHECK(std::string(walk_kind_name(WalkKind::Prime)) == "prime");
}

TEST_CASE("secular root scan on the equilateral triangle") {
  MetricGraph g = triangle_k3();
  CHECK_THROWS_AS(find_secular_roots(g, -1.0, 2.0, 100), InputError);
  CHECK_THROWS_AS(find_secular_roots(g, 1.0, 2.0, 1), InputError);
  CHECK(find_secular_roots(g, 1.0, 1.0, 100).roots.empty());

  SecularScan scan = find_secular_roots(g, 0.1, 7.0, 2000);
  REQUIRE(scan.roots.size() == 3);
  std::vector<double> oracle{2.0 * pi / 3.0, 4.0 * pi / 3.0, 2.0 * pi};
  for (size_t i = 0; i < 3; ++i) CHECK(std::abs(scan.roots[i] - oracle[i]) < 1e-8);
  CHECK(scan.modes.size() == 6);  // each root is doubly degenerate
  for (const Eigenmode& mode : scan.modes) {
    CHECK(mode.residual < 1e-6);
    CHECK(mode.a.size() == 6);
    CHECK(mode.b.size() == 6);
    CHECK(mode.phi.size() == 3);
    double norm2 = 0.0;
    for (cplx v : mode.a) norm2 += std::norm(v);
    CHECK(std::abs(norm2 - 1.0) < 1e-9);
    // Counter-propagating coefficients on each edge trade off via the
    // return phase: a_e = b_{e^-1} exp(i L_e (k + A_e)).
    for (int arc = 0; arc < g.arc_count(); ++arc) {
      cplx phase = std::exp(cplx(0.0, 1.0) * g.length(arc) * (mode.k + g.potential(arc)));
      CHECK(std::abs(mode.a[arc] - mode.b[g.arc(arc).inverse] * phase) < 1e-6);
    }
  }
}

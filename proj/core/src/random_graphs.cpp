#include "qgzeta/random_graphs.hpp"

#include <cmath>

namespace qgz {

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

MetricGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphOptions& opts) {
  std::uniform_int_distribution<int> nv(opts.min_vertices, opts.max_vertices);
  int n = nv(rng);
  std::vector<std::string> vertices;
  std::map<std::string, cplx> lambda;
  for (int v = 0; v < n; ++v) {
    vertices.push_back("v" + std::to_string(v + 1));
    lambda[vertices.back()] = cplx(uniform_in(rng, opts.lambda_min, opts.lambda_max), 0.0);
  }

  auto draw_edge = [&](const std::string& from, const std::string& to) {
    EdgeSpec e;
    e.from = from;
    e.to = to;
    e.length = uniform_in(rng, opts.length_min, opts.length_max);
    e.potential = uniform_in(rng, opts.potential_min, opts.potential_max);
    return e;
  };

  std::vector<EdgeSpec> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> prev(0, v - 1);
    edges.push_back(draw_edge(vertices[prev(rng)], vertices[v]));
  }
  int max_extra = std::max(0, opts.max_edges - static_cast<int>(edges.size()));
  std::uniform_int_distribution<int> ne(0, max_extra);
  int extra = ne(rng);
  std::uniform_int_distribution<int> anyv(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    if (uniform_in(rng, 0.0, 1.0) < opts.loop_prob) {
      const std::string& v = vertices[anyv(rng)];
      edges.push_back(draw_edge(v, v));
    } else {
      edges.push_back(draw_edge(vertices[anyv(rng)], vertices[anyv(rng)]));
    }
  }
  if (opts.force_loop) {
    const std::string& v = vertices[anyv(rng)];
    edges.push_back(draw_edge(v, v));
  }
  if (opts.force_multi_edge && !edges.empty()) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(edges.size()) - 1);
    const EdgeSpec& base = edges[pick(rng)];
    edges.push_back(draw_edge(base.from, base.to));
  }
  for (size_t i = 0; i < edges.size(); ++i) edges[i].id = "e" + std::to_string(i + 1);
  return build_graph(vertices, edges, lambda);
}

VoltageAssignment random_voltage(std::mt19937_64& rng, const MetricGraph& g, GroupPtr group) {
  std::uniform_int_distribution<int> el(0, group->size() - 1);
  std::vector<int> per_edge(g.edge_count());
  for (auto& v : per_edge) v = el(rng);
  return VoltageAssignment::from_edges(g, std::move(group), per_edge);
}

cplx random_sigma(std::mt19937_64& rng, const MetricGraph& g, cplx k) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    double r = uniform_in(rng, 0.4, 1.6);
    double th = uniform_in(rng, 0.0, 2.0 * pi);
    cplx sigma = r * cplx(std::cos(th), std::sin(th));
    bool ok = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      cplx rt = std::exp(cplx(0.0, 2.0) * k * g.length(g.forward_arc(e)));
      if (std::abs(sigma * sigma - rt) < 1e-3) ok = false;
    }
    if (ok) return sigma;
  }
  throw ConvergenceError("random_sigma: could not find a safe draw");
}

cplx random_s(std::mt19937_64& rng, const MetricGraph& g, cplx k) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    double r = uniform_in(rng, 0.3, 0.9);
    double th = uniform_in(rng, 0.0, 2.0 * pi);
    cplx s = r * cplx(std::cos(th), std::sin(th));
    bool ok = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      cplx rt = std::exp(cplx(0.0, 2.0) * k * g.length(g.forward_arc(e)));
      if (std::abs(1.0 - rt * s * s) < 1e-3) ok = false;
    }
    if (ok) return s;
  }
  throw ConvergenceError("random_s: could not find a safe draw");
}

}  // namespace qgz

#include "qgzeta/graph.hpp"

#include <queue>
#include <set>

namespace qgz {

int MetricGraph::vertex_index(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) throw InputError("unknown vertex '" + name + "'");
  return it->second;
}

std::string MetricGraph::arc_name(int a) const {
  const Arc& arc = arcs_.at(a);
  if (a == forward_arc(arc.edge)) return edge_ids_[arc.edge];
  return edge_ids_[arc.edge] + "^-1";
}

std::vector<EdgeSpec> MetricGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edge_count());
  for (int e = 0; e < edge_count(); ++e) {
    int f = forward_arc(e);
    out.push_back({edge_ids_[e], vertex_names_[arcs_[f].origin], vertex_names_[arcs_[f].terminus],
                   length_[f], potential_[f]});
  }
  return out;
}

MetricGraph build_graph_impl(const std::vector<std::string>& vertices,
                             const std::vector<EdgeSpec>& edges,
                             const std::map<std::string, cplx>& lambda,
                             bool require_connected) {
  MetricGraph g;
  if (vertices.empty()) throw InputError("graph needs at least one vertex");
  for (const auto& name : vertices) {
    if (name.empty()) throw InputError("empty vertex name");
    if (!g.vertex_index_.emplace(name, static_cast<int>(g.vertex_names_.size())).second)
      throw InputError("duplicate vertex '" + name + "'");
    g.vertex_names_.push_back(name);
  }
  g.lambda_.assign(g.vertex_names_.size(), cplx(0.0, 0.0));
  for (const auto& [name, value] : lambda) g.lambda_[g.vertex_index(name)] = value;

  std::set<std::string> edge_seen;
  int k = 0;
  for (const auto& spec : edges) {
    std::string id = spec.id.empty() ? "e" + std::to_string(k + 1) : spec.id;
    if (!edge_seen.insert(id).second) throw InputError("duplicate edge id '" + id + "'");
    if (!(spec.length > 0.0)) throw InputError("edge '" + id + "': length must be positive");
    int from = g.vertex_index(spec.from);
    int to = g.vertex_index(spec.to);
    Arc fwd{from, to, 2 * k + 1, k};
    Arc rev{to, from, 2 * k, k};
    g.arcs_.push_back(fwd);
    g.arcs_.push_back(rev);
    g.length_.push_back(spec.length);
    g.length_.push_back(spec.length);
    g.potential_.push_back(spec.potential);
    g.potential_.push_back(-spec.potential);
    g.edge_ids_.push_back(id);
    ++k;
  }

  g.arcs_from_.assign(g.vertex_names_.size(), {});
  for (int a = 0; a < g.arc_count(); ++a) g.arcs_from_[g.arcs_[a].origin].push_back(a);

  // BFS over the underlying undirected graph.
  std::vector<bool> seen(g.vertex_count(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int a : g.arcs_from_[v]) {
      int w = g.arcs_[a].terminus;
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  g.connected_ = reached == g.vertex_count();
  if (require_connected && !g.connected_) throw InputError("graph is not connected");
  return g;
}

MetricGraph build_graph(const std::vector<std::string>& vertices,
                        const std::vector<EdgeSpec>& edges,
                        const std::map<std::string, cplx>& lambda) {
  return build_graph_impl(vertices, edges, lambda, true);
}

MetricGraph with_uniform_data(const MetricGraph& g, double length, double potential, cplx lambda) {
  std::vector<std::string> vertices;
  std::map<std::string, cplx> lam;
  for (int v = 0; v < g.vertex_count(); ++v) {
    vertices.push_back(g.vertex_name(v));
    lam[g.vertex_name(v)] = lambda;
  }
  std::vector<EdgeSpec> edges = g.edge_specs();
  for (auto& e : edges) {
    e.length = length;
    e.potential = potential;
  }
  return build_graph_impl(vertices, edges, lam, false);
}

}  // namespace qgz

#include "qgzeta/covering.hpp"

namespace qgz {

VoltageAssignment::VoltageAssignment(const MetricGraph& g, GroupPtr group,
                                     std::vector<int> arc_voltages)
    : group_(std::move(group)), arc_voltages_(std::move(arc_voltages)) {
  if (!group_) throw InputError("voltage assignment needs a group");
  if (static_cast<int>(arc_voltages_.size()) != g.arc_count())
    throw InputError("voltage assignment must cover every arc");
  for (int a = 0; a < g.arc_count(); ++a) {
    int v = arc_voltages_[a];
    if (v < 0 || v >= group_->size())
      throw InputError("voltage on arc " + g.arc_name(a) + " out of range");
    int vi = arc_voltages_[g.arc(a).inverse];
    if (vi != group_->inverse(v))
      throw InputError("voltage on arc " + g.arc_name(a) +
                       " is not inverse-consistent with its reversal");
  }
}

VoltageAssignment VoltageAssignment::from_edges(const MetricGraph& g, GroupPtr group,
                                                const std::vector<int>& edge_voltages) {
  if (!group) throw InputError("voltage assignment needs a group");
  if (static_cast<int>(edge_voltages.size()) != g.edge_count())
    throw InputError("need one voltage per edge");
  std::vector<int> arcs(g.arc_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    int v = edge_voltages[e];
    if (v < 0 || v >= group->size())
      throw InputError("voltage on edge " + g.edge_id(e) + " out of range");
    arcs[g.forward_arc(e)] = v;
    arcs[g.reverse_arc(e)] = group->inverse(v);
  }
  return VoltageAssignment(g, std::move(group), std::move(arcs));
}

VoltageAssignment VoltageAssignment::trivial(const MetricGraph& g, GroupPtr group) {
  return from_edges(g, std::move(group), std::vector<int>(g.edge_count(), 0));
}

int CoveringGraph::covering_arc(int base_arc, int g) const {
  int edge = base_arc / 2;
  if (base_arc % 2 == 0) return 2 * (g * base_edges + edge);
  // The lift of a reversal arc in fiber g is the reversal of the lifted copy
  // whose listed arc carried the fiber into g.
  for (int a = 1; a < static_cast<int>(arc_base.size()); a += 2)
    if (arc_base[a] == base_arc && arc_fiber[a] == g) return a;
  throw InputError("covering arc lookup failed");
}

CoveringGraph derived_covering(const MetricGraph& g, const VoltageAssignment& va) {
  if (va.arc_count() != g.arc_count())
    throw InputError("voltage assignment does not match the graph");
  const FiniteGroup& gr = *va.group();
  int n = g.vertex_count(), m = g.edge_count(), p = gr.size();

  std::vector<std::string> vertices;
  vertices.reserve(static_cast<size_t>(n) * p);
  std::map<std::string, cplx> lambda;
  for (int h = 0; h < p; ++h)
    for (int v = 0; v < n; ++v) {
      std::string name = g.vertex_name(v) + "@" + std::to_string(h);
      vertices.push_back(name);
      lambda[name] = g.lambda(v);
    }

  std::vector<EdgeSpec> edges;
  edges.reserve(static_cast<size_t>(m) * p);
  for (int h = 0; h < p; ++h)
    for (int e = 0; e < m; ++e) {
      int fwd = g.forward_arc(e);
      int ht = gr.op(h, va.voltage(fwd));
      EdgeSpec spec;
      spec.id = g.edge_id(e) + "@" + std::to_string(h);
      spec.from = g.vertex_name(g.arc(fwd).origin) + "@" + std::to_string(h);
      spec.to = g.vertex_name(g.arc(fwd).terminus) + "@" + std::to_string(ht);
      spec.length = g.length(fwd);
      spec.potential = g.potential(fwd);
      edges.push_back(std::move(spec));
    }

  CoveringGraph out;
  out.graph = build_graph_impl(vertices, edges, lambda, false);
  out.connected = out.graph.connected();
  out.base_vertices = n;
  out.base_edges = m;
  out.vertex_base.resize(static_cast<size_t>(n) * p);
  out.vertex_fiber.resize(static_cast<size_t>(n) * p);
  for (int h = 0; h < p; ++h)
    for (int v = 0; v < n; ++v) {
      out.vertex_base[h * n + v] = v;
      out.vertex_fiber[h * n + v] = h;
    }
  out.arc_base.resize(static_cast<size_t>(2) * m * p);
  out.arc_fiber.resize(static_cast<size_t>(2) * m * p);
  for (int h = 0; h < p; ++h)
    for (int e = 0; e < m; ++e) {
      int idx = h * m + e;
      int fwd = g.forward_arc(e);
      out.arc_base[2 * idx] = fwd;
      out.arc_fiber[2 * idx] = h;
      out.arc_base[2 * idx + 1] = g.reverse_arc(e);
      out.arc_fiber[2 * idx + 1] = gr.op(h, va.voltage(fwd));
    }
  return out;
}

}  // namespace qgz

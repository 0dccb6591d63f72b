#pragma once

#include <vector>

#include "qgzeta/graph.hpp"
#include "qgzeta/group.hpp"

namespace qgz {

// Group element per arc, with voltage(e^-1) = voltage(e)^-1 enforced
// against the graph it was built for.
class VoltageAssignment {
 public:
  VoltageAssignment(const MetricGraph& g, GroupPtr group, std::vector<int> arc_voltages);

  // One element per edge, assigned to the listed direction.
  static VoltageAssignment from_edges(const MetricGraph& g, GroupPtr group,
                                      const std::vector<int>& edge_voltages);
  static VoltageAssignment trivial(const MetricGraph& g, GroupPtr group);

  const GroupPtr& group() const { return group_; }
  int voltage(int arc) const { return arc_voltages_.at(arc); }
  int arc_count() const { return static_cast<int>(arc_voltages_.size()); }

 private:
  GroupPtr group_;
  std::vector<int> arc_voltages_;
};

// Derived cover: one vertex fiber copy per group element, arcs lifted by
// right-multiplying the fiber coordinate with the base arc's voltage.
struct CoveringGraph {
  MetricGraph graph;
  bool connected = false;
  int base_vertices = 0;
  int base_edges = 0;
  std::vector<int> vertex_base;   // covering vertex -> base vertex
  std::vector<int> vertex_fiber;  // covering vertex -> group element
  std::vector<int> arc_base;
  std::vector<int> arc_fiber;

  int covering_vertex(int base_vertex, int g) const { return g * base_vertices + base_vertex; }
  int covering_arc(int base_arc, int g) const;
};

CoveringGraph derived_covering(const MetricGraph& g, const VoltageAssignment& va);

}  // namespace qgz

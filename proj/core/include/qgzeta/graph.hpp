#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgzeta/types.hpp"

namespace qgz {

// Directed arc of a metric graph. Arcs come in inverse pairs: edge j yields
// arc 2j in the listed direction and arc 2j+1 in the opposite one.
struct Arc {
  int origin = -1;
  int terminus = -1;
  int inverse = -1;
  int edge = -1;
};

struct EdgeSpec {
  std::string id;  // autogenerated "e<k>" when empty
  std::string from;
  std::string to;
  double length = 1.0;
  double potential = 0.0;  // carried with + sign by the listed direction
};

// Metric graph with per-edge lengths, antisymmetric per-arc vector
// potentials, and a complex coupling parameter per vertex. Immutable.
class MetricGraph {
 public:
  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(arcs_.size()) / 2; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const std::string& vertex_name(int v) const { return vertex_names_.at(v); }
  int vertex_index(const std::string& name) const;  // throws on unknown name
  cplx lambda(int v) const { return lambda_.at(v); }
  int degree(int v) const { return static_cast<int>(arcs_from_.at(v).size()); }
  const std::vector<int>& arcs_from(int v) const { return arcs_from_.at(v); }

  const Arc& arc(int a) const { return arcs_.at(a); }
  double length(int a) const { return length_.at(a); }
  double potential(int a) const { return potential_.at(a); }
  std::string arc_name(int a) const;

  const std::string& edge_id(int e) const { return edge_ids_.at(e); }
  int forward_arc(int e) const { return 2 * e; }
  int reverse_arc(int e) const { return 2 * e + 1; }

  bool connected() const { return connected_; }

  // Same topology and ids, new metric data.
  std::vector<EdgeSpec> edge_specs() const;

 private:
  friend MetricGraph build_graph_impl(const std::vector<std::string>&,
                                      const std::vector<EdgeSpec>&,
                                      const std::map<std::string, cplx>&, bool);
  std::vector<std::string> vertex_names_;
  std::map<std::string, int> vertex_index_;
  std::vector<cplx> lambda_;
  std::vector<Arc> arcs_;
  std::vector<double> length_;
  std::vector<double> potential_;
  std::vector<std::string> edge_ids_;
  std::vector<std::vector<int>> arcs_from_;
  bool connected_ = false;
};

// Validates names, endpoints, positive lengths, and connectivity.
MetricGraph build_graph(const std::vector<std::string>& vertices,
                        const std::vector<EdgeSpec>& edges,
                        const std::map<std::string, cplx>& lambda = {});

// Same, but a disconnected result is allowed; used for covering graphs.
MetricGraph build_graph_impl(const std::vector<std::string>& vertices,
                             const std::vector<EdgeSpec>& edges,
                             const std::map<std::string, cplx>& lambda,
                             bool require_connected);

// Rebuild with every edge length, listed-direction potential, and vertex
// coupling replaced by the given uniform values.
MetricGraph with_uniform_data(const MetricGraph& g, double length, double potential, cplx lambda);

}  // namespace qgz

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgzeta/covering.hpp"
#include "qgzeta/graph.hpp"
#include "qgzeta/group.hpp"

namespace qgz {

// Everything a problem description file can carry. The voltage assignment
// is present exactly when a group is; edges without an explicit voltage get
// the identity.
struct GraphBundle {
  MetricGraph graph;
  GroupPtr group;  // null when the file has no group block
  std::optional<VoltageAssignment> voltage;
  std::vector<Representation> representations;  // user-supplied, validated
};

// Throws InputError with field context on malformed input.
GraphBundle parse_graph_file(const std::string& path);
GraphBundle parse_graph_text(const std::string& text, const std::string& origin);

// Representations to decompose with: the user-supplied set if present
// (reordered so the trivial one leads), otherwise all characters of an
// abelian group.
IrrepSet resolve_irreps(const GraphBundle& bundle);

// Pick one representation by name or by index into resolve_irreps order.
Representation resolve_rep(const GraphBundle& bundle, const std::string& name_or_index);

}  // namespace qgz

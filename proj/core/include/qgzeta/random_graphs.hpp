#pragma once

#include <random>

#include "qgzeta/covering.hpp"
#include "qgzeta/graph.hpp"
#include "qgzeta/group.hpp"

namespace qgz {

struct RandomGraphOptions {
  int min_vertices = 2;
  int max_vertices = 8;
  int max_edges = 16;
  double loop_prob = 0.15;       // chance an extra edge is a loop
  bool force_loop = false;       // append a loop regardless
  bool force_multi_edge = false; // duplicate one existing edge
  double length_min = 0.5, length_max = 2.0;
  double potential_min = -1.0, potential_max = 1.0;
  double lambda_min = -2.0, lambda_max = 2.0;  // real couplings
};

// Connected graph: a random spanning tree plus extra edges, loops and
// parallel edges included, with metric data drawn from the option ranges.
MetricGraph random_connected_graph(std::mt19937_64& rng, const RandomGraphOptions& opts = {});

VoltageAssignment random_voltage(std::mt19937_64& rng, const MetricGraph& g, GroupPtr group);

double uniform_in(std::mt19937_64& rng, double lo, double hi);

// Spectral parameter in an annulus around the unit circle, redrawn until it
// keeps a safe distance from every edge round-trip phase of (g, k).
cplx random_sigma(std::mt19937_64& rng, const MetricGraph& g, cplx k);

// |s| in [0.3, 0.9], redrawn so 1 - exp(2ikL) s^2 stays away from zero.
cplx random_s(std::mt19937_64& rng, const MetricGraph& g, cplx k);

}  // namespace qgz

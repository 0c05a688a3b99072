#pragma once

// Min-cost max-flow reformulation for instances whose conflict graph is a
// disjoint union of cliques.
//
// Layout: one source per item set (supply = quota), one node per item, one
// node per equivalence class, one terminal. Arcs source->item carry the
// item's scenario cost; item->class and class->terminal arcs cost nothing.
// Every arc has capacity 1.

#include <string>
#include <vector>

#include "iris/model.hpp"

namespace iris {

struct FlowArc {
  int from = 0;
  int to = 0;
  Cost capacity = 0;
  Cost cost = 0;
};

struct FlowNetwork {
  int num_sources = 0;
  int num_items = 0;
  int num_classes = 0;
  std::vector<Cost> supply;  // indexed by node; nonzero only at sources
  std::vector<FlowArc> arcs;
  std::vector<int> item_arc;  // flat item -> index of its source->item arc

  int num_nodes() const { return num_sources + num_items + num_classes + 1; }
  int source_node(int set) const { return set; }
  int item_node(int flat) const { return num_sources + flat; }
  int class_node(int cls) const { return num_sources + num_items + cls; }
  int terminal() const { return num_sources + num_items + num_classes; }
};

struct FlowResult {
  Cost flow_value = 0;
  Cost total_cost = 0;
  std::vector<Cost> arc_flows;  // parallel to FlowNetwork::arcs
};

// Throws std::invalid_argument unless `classes` partitions the items into
// cliques that contain every forbidden pair.
FlowNetwork build_network(const Instance& instance, const Scenario& scenario,
                          const std::vector<std::vector<int>>& classes);

// Successive shortest augmenting paths with node potentials. Arc costs must
// be nonnegative.
FlowResult min_cost_max_flow(const FlowNetwork& net);

// Optimal when the flow saturates every source, Infeasible otherwise.
RisSolution solve_via_flow(const Instance& instance, const Scenario& scenario,
                           const std::vector<std::vector<int>>& classes);
// Classifies first; throws std::invalid_argument for non-clique instances.
RisSolution solve_via_flow(const Instance& instance, const Scenario& scenario);

std::string to_dot(const Instance& instance, const FlowNetwork& net);

}  // namespace iris

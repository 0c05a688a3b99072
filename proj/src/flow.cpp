#include "iris/flow.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "iris/det_solver.hpp"

namespace iris {

FlowNetwork build_network(const Instance& instance, const Scenario& scenario,
                          const std::vector<std::vector<int>>& classes) {
  const int n = instance.num_items();
  std::vector<int> class_of(n, -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int f : classes[c]) {
      if (f < 0 || f >= n || class_of[f] >= 0)
        throw std::invalid_argument("build_network: classes do not partition the items");
      class_of[f] = static_cast<int>(c);
    }
    for (std::size_t a = 0; a < classes[c].size(); ++a)
      for (std::size_t b = a + 1; b < classes[c].size(); ++b)
        if (!instance.conflicts(classes[c][a], classes[c][b]))
          throw std::invalid_argument("build_network: class " + std::to_string(c) +
                                      " is not a clique");
  }
  for (int f = 0; f < n; ++f) {
    if (class_of[f] < 0)
      throw std::invalid_argument("build_network: item " + std::to_string(f) +
                                  " belongs to no class");
    for (int g : instance.partners(f))
      if (class_of[g] != class_of[f])
        throw std::invalid_argument("build_network: forbidden pair spans two classes");
  }

  FlowNetwork net;
  net.num_sources = instance.num_sets();
  net.num_items = n;
  net.num_classes = static_cast<int>(classes.size());
  net.supply.assign(net.num_nodes(), 0);
  for (int i = 0; i < instance.num_sets(); ++i) net.supply[i] = instance.quota(i);

  net.item_arc.resize(n);
  for (int f = 0; f < n; ++f) {
    net.item_arc[f] = static_cast<int>(net.arcs.size());
    net.arcs.push_back({net.source_node(instance.set_of(f)), net.item_node(f), 1, scenario.cost[f]});
  }
  for (int f = 0; f < n; ++f) net.arcs.push_back({net.item_node(f), net.class_node(class_of[f]), 1, 0});
  for (int c = 0; c < net.num_classes; ++c) net.arcs.push_back({net.class_node(c), net.terminal(), 1, 0});
  return net;
}

namespace {

struct Residual {
  int to;
  Cost cap;
  Cost cost;
  int rev;  // index of the reverse edge in graph[to]
};

}  // namespace

FlowResult min_cost_max_flow(const FlowNetwork& net) {
  // Super source feeding each source with its supply.
  const int super = net.num_nodes();
  const int nodes = super + 1;
  std::vector<std::vector<Residual>> graph(nodes);
  auto add = [&](int u, int v, Cost cap, Cost cost) {
    graph[u].push_back({v, cap, cost, static_cast<int>(graph[v].size())});
    graph[v].push_back({u, 0, -cost, static_cast<int>(graph[u].size()) - 1});
    return std::pair<int, int>{u, static_cast<int>(graph[u].size()) - 1};
  };
  for (const auto& arc : net.arcs)
    if (arc.cost < 0) throw std::invalid_argument("min_cost_max_flow: negative arc cost");

  std::vector<std::pair<int, int>> handles;
  handles.reserve(net.arcs.size());
  for (const auto& arc : net.arcs) handles.push_back(add(arc.from, arc.to, arc.capacity, arc.cost));
  for (int v = 0; v < net.num_nodes(); ++v)
    if (net.supply[v] > 0) add(super, v, net.supply[v], 0);

  const int sink = net.terminal();
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  std::vector<Cost> potential(nodes, 0);
  std::vector<Cost> dist(nodes);
  std::vector<int> prev_node(nodes), prev_edge(nodes);
  FlowResult result;

  for (;;) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[super] = 0;
    using Entry = std::pair<Cost, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.push({0, super});
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (d > dist[u]) continue;
      for (std::size_t e = 0; e < graph[u].size(); ++e) {
        const auto& edge = graph[u][e];
        if (edge.cap <= 0) continue;
        const Cost nd = d + edge.cost + potential[u] - potential[edge.to];
        if (nd < dist[edge.to]) {
          dist[edge.to] = nd;
          prev_node[edge.to] = u;
          prev_edge[edge.to] = static_cast<int>(e);
          heap.push({nd, edge.to});
        }
      }
    }
    if (dist[sink] >= kInf) break;
    for (int v = 0; v < nodes; ++v)
      if (dist[v] < kInf) potential[v] += dist[v];

    Cost push = kInf;
    for (int v = sink; v != super; v = prev_node[v])
      push = std::min(push, graph[prev_node[v]][prev_edge[v]].cap);
    for (int v = sink; v != super; v = prev_node[v]) {
      auto& edge = graph[prev_node[v]][prev_edge[v]];
      edge.cap -= push;
      graph[v][edge.rev].cap += push;
      result.total_cost += push * edge.cost;
    }
    result.flow_value += push;
  }

  result.arc_flows.reserve(net.arcs.size());
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const auto& edge = graph[handles[a].first][handles[a].second];
    result.arc_flows.push_back(net.arcs[a].capacity - edge.cap);
  }
  return result;
}

RisSolution solve_via_flow(const Instance& instance, const Scenario& scenario,
                           const std::vector<std::vector<int>>& classes) {
  const auto net = build_network(instance, scenario, classes);
  const auto flow = min_cost_max_flow(net);
  RisSolution sol;
  if (flow.flow_value != instance.total_quota()) return sol;
  sol.selection = Selection(instance.num_items());
  for (int f = 0; f < instance.num_items(); ++f)
    if (flow.arc_flows[net.item_arc[f]] == 1) sol.selection.set(f, true);
  sol.value = flow.total_cost;
  sol.status = RisStatus::Optimal;
  return sol;
}

RisSolution solve_via_flow(const Instance& instance, const Scenario& scenario) {
  auto structure = classify(instance);
  if (structure.kind == Structure::General)
    throw std::invalid_argument("solve_via_flow: conflict graph is not a union of cliques");
  if (structure.kind == Structure::Unconstrained) {
    for (int f = 0; f < instance.num_items(); ++f) structure.classes.push_back({f});
  }
  return solve_via_flow(instance, scenario, structure.classes);
}

std::string to_dot(const Instance& instance, const FlowNetwork& net) {
  std::ostringstream os;
  os << "digraph ris_flow {\n  rankdir=LR;\n";
  for (int i = 0; i < net.num_sources; ++i)
    os << "  n" << net.source_node(i) << " [label=\"p" << i << " (" << net.supply[i] << ")\"];\n";
  for (int f = 0; f < net.num_items; ++f) {
    const auto r = instance.ref(f);
    os << "  n" << net.item_node(f) << " [label=\"i" << r.set << "," << r.item << "\"];\n";
  }
  for (int c = 0; c < net.num_classes; ++c)
    os << "  n" << net.class_node(c) << " [label=\"e" << c << "\"];\n";
  os << "  n" << net.terminal() << " [label=\"t\"];\n";
  for (const auto& arc : net.arcs)
    os << "  n" << arc.from << " -> n" << arc.to << " [label=\"" << arc.cost << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace iris

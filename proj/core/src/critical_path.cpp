#include "fabric/critical_path.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>

namespace fabric {

std::string_view method_name(CpMethod method) {
  switch (method) {
    case CpMethod::Approximate:
      return "approximate";
    case CpMethod::PaperExact:
      return "paper-exact";
    case CpMethod::LongestPath:
      return "longest";
  }
  return "longest";
}

std::vector<OpId> topological_sort(const CircuitGraph& graph) { return topological_order(graph); }

namespace {

CriticalPathResult finish(CpMethod method, std::vector<OpId> ops, double unit_time) {
  CriticalPathResult r;
  r.method = method;
  r.ops = std::move(ops);
  r.depth = r.ops.size();
  r.latency_unit_time = static_cast<double>(r.depth) * unit_time;
  return r;
}

// Node numbering shared by approximate_cp and paper_exact_cp: arguments take
// ids [0, A), operators [A, A + N). Lower ids win ties.
struct NodeGraph {
  std::size_t num_args = 0;
  std::vector<std::vector<std::size_t>> succs;

  explicit NodeGraph(const CircuitGraph& graph) {
    const Dependencies deps = dependencies(graph);
    num_args = graph.arguments.size();
    succs.resize(num_args + graph.operators.size());
    for (std::size_t a = 0; a < num_args; ++a)
      for (OpId op : deps.arg_succs[a]) succs[a].push_back(num_args + op);
    for (OpId op = 0; op < graph.operators.size(); ++op)
      for (OpId s : deps.op_succs[op]) succs[num_args + op].push_back(num_args + s);
  }

  bool is_arg(std::size_t node) const { return node < num_args; }
  OpId op_of(std::size_t node) const { return static_cast<OpId>(node - num_args); }
};

}  // namespace

CriticalPathResult approximate_cp(const CircuitGraph& graph, double unit_time_per_gate) {
  const NodeGraph g(graph);
  const std::size_t n = g.succs.size();

  // result = topologicalSort(G)
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& ss : g.succs)
    for (std::size_t s : ss) ++indegree[s];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<std::size_t> result;
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    result.push_back(v);
    for (std::size_t s : g.succs[v])
      if (--indegree[s] == 0) ready.push(s);
  }
  if (result.size() != n) throw Error("graph contains a cycle");

  // for node in result[:-1]: skip sources and sinks
  std::vector<OpId> cp;
  if (!result.empty()) result.pop_back();
  for (std::size_t v : result) {
    if (g.is_arg(v) || g.succs[v].empty()) continue;
    cp.push_back(g.op_of(v));
  }
  return finish(CpMethod::Approximate, std::move(cp), unit_time_per_gate);
}

CriticalPathResult paper_exact_cp(const CircuitGraph& graph, double unit_time_per_gate) {
  const NodeGraph g(graph);
  const std::size_t n = g.succs.size();
  std::vector<std::size_t> sinks;
  for (std::size_t v = g.num_args; v < n; ++v)
    if (g.succs[v].empty()) sinks.push_back(v);

  std::vector<std::size_t> best;  // node path including the source
  std::size_t plen = 0;
  for (std::size_t src = 0; src < g.num_args; ++src) {
    // BFS parents give getShortestPath(src, sink) for every sink at once.
    std::vector<std::optional<std::size_t>> parent(n);
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> frontier;
    seen[src] = true;
    frontier.push(src);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      for (std::size_t s : g.succs[v]) {
        if (seen[s]) continue;
        seen[s] = true;
        parent[s] = v;
        frontier.push(s);
      }
    }
    for (std::size_t sink : sinks) {
      if (!seen[sink]) continue;
      std::vector<std::size_t> path;
      for (std::optional<std::size_t> v = sink; v; v = parent[*v]) path.push_back(*v);
      std::reverse(path.begin(), path.end());
      if (path.size() > plen) {
        plen = path.size();
        best = std::move(path);
      }
    }
  }

  std::vector<OpId> ops;
  for (std::size_t v : best)
    if (!g.is_arg(v)) ops.push_back(g.op_of(v));
  return finish(CpMethod::PaperExact, std::move(ops), unit_time_per_gate);
}

CriticalPathResult longest_path_cp(const CircuitGraph& graph, double unit_time_per_gate) {
  const std::vector<OpId> order = topological_order(graph);
  const Dependencies deps = dependencies(graph);
  const std::size_t n = graph.operators.size();

  // Longest chain starting at each op; successor choice prefers the lowest
  // id, which yields the lexicographically smallest sequence among ties.
  std::vector<std::size_t> length(n, 0);
  std::vector<std::optional<OpId>> next(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const OpId v = *it;
    length[v] = 1;
    for (OpId s : deps.op_succs[v]) {
      if (length[s] + 1 > length[v]) {
        length[v] = length[s] + 1;
        next[v] = s;
      }
    }
  }

  std::optional<OpId> start;
  for (OpId v = 0; v < n; ++v)
    if (!start || length[v] > length[*start]) start = v;

  std::vector<OpId> ops;
  for (std::optional<OpId> v = start; v; v = next[*v]) ops.push_back(*v);
  return finish(CpMethod::LongestPath, std::move(ops), unit_time_per_gate);
}

CriticalPathResult critical_path(const CircuitGraph& graph, CpMethod method, double unit_time_per_gate) {
  switch (method) {
    case CpMethod::Approximate:
      return approximate_cp(graph, unit_time_per_gate);
    case CpMethod::PaperExact:
      return paper_exact_cp(graph, unit_time_per_gate);
    case CpMethod::LongestPath:
      return longest_path_cp(graph, unit_time_per_gate);
  }
  return longest_path_cp(graph, unit_time_per_gate);
}

Throughput throughput(std::size_t depth, std::uint64_t batch, const FabricConfig& config) {
  if (depth == 0) throw Error("no compute ops on critical path");
  if (batch == 0) throw Error("batch must be a positive integer");
  Throughput t;
  t.latency_unit_time = static_cast<double>(depth) * config.unit_time_per_gate;
  t.outputs_per_batch_window = batch / depth;
  return t;
}

}  // namespace fabric

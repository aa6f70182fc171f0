// Copyright 2026 The lossdag Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "lossdag/graph.hpp"
#include "lossdag/registry.hpp"

namespace lossdag {

enum class Severity { error, warning };

struct Diagnostic {
  int node = -1;
  Severity severity = Severity::error;
  std::string message;
};

struct ValidationReport {
  bool ok = false;
  std::vector<Diagnostic> diagnostics;
  std::map<int, DType> inferred_types;

  std::string to_string() const {
    std::string out;
    for (const auto& d : diagnostics) {
      out += (d.severity == Severity::error ? "error" : "warning");
      out += " (node " + std::to_string(d.node) + "): " + d.message + "\n";
    }
    return out;
  }
};

struct CycleDetected : Error {
  std::vector<int> offending;
  explicit CycleDetected(std::vector<int> nodes)
      : Error("cycle detected in graph"), offending(std::move(nodes)) {}
};

struct TypeMismatch : TypeError {
  int node;
  TypeMismatch(int node_, const std::string& msg)
      : TypeError("type mismatch at node " + std::to_string(node_) + ": " + msg),
        node(node_) {}
};

/// Kahn's algorithm with an id-ordered frontier: every node precedes its
/// consumers and the order is a pure function of the graph.
inline std::vector<int> topo_order(const Graph& g) {
  const int n = g.size();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> consumers(n);
  for (int id = 0; id < n; ++id) {
    for (int src : g.nodes[id].inputs) {
      if (src < 0 || src >= n) throw Error("edge to nonexistent node " + std::to_string(src));
      consumers[src].push_back(id);
      ++indegree[id];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int id = 0; id < n; ++id)
    if (indegree[id] == 0) ready.push(id);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int id = ready.top();
    ready.pop();
    order.push_back(id);
    for (int c : consumers[id])
      if (--indegree[c] == 0) ready.push(c);
  }
  if (static_cast<int>(order.size()) != n) {
    std::vector<int> cyc;
    for (int id = 0; id < n; ++id)
      if (indegree[id] > 0) cyc.push_back(id);
    throw CycleDetected(std::move(cyc));
  }
  return order;
}

/// Per-node results of a successful validation, reused by evaluation so the
/// interpreter never re-resolves signatures.
struct GraphAnalysis {
  std::vector<int> order;              // topological
  std::vector<DType> types;            // per node
  std::vector<int> overload;           // per node; -1 unless Operation
  std::vector<bool> reachable;         // on a path to Output
  int output_node = -1;
};

namespace detail {

inline int expected_arity(const Graph& g, const Node& n, const OperatorRegistry& reg) {
  if (std::holds_alternative<InputNode>(n.kind)) return 0;
  if (std::holds_alternative<ConstantNode>(n.kind)) return 0;
  if (std::holds_alternative<OutputNode>(n.kind)) return 1;
  if (const auto* p = std::get_if<ParameterNode>(&n.kind)) return param_sig_arity(p->sig);
  const auto& op = std::get<OperationNode>(n.kind);
  const OpSignature* sig = reg.find(op.op);
  if (!sig) return -2;       // unknown op
  return sig->arity;         // -1: overload-dependent
}

}  // namespace detail

/// Infers every node's output type, or throws TypeMismatch / CycleDetected.
/// `out` optionally receives the full analysis.
inline std::map<int, DType> infer_types(const Graph& g,
                                        const OperatorRegistry& reg = OperatorRegistry::standard(),
                                        GraphAnalysis* out = nullptr) {
  GraphAnalysis an;
  an.order = topo_order(g);
  an.types.assign(g.nodes.size(), DType::R);
  an.overload.assign(g.nodes.size(), -1);

  for (int id : an.order) {
    const Node& n = g.nodes[id];
    if (const auto* in = std::get_if<InputNode>(&n.kind)) {
      auto t = input_symbol_type(g, in->symbol);
      if (!t) throw TypeMismatch(id, "unknown input symbol '" + in->symbol + "'");
      an.types[id] = *t;
    } else if (std::holds_alternative<ConstantNode>(n.kind)) {
      an.types[id] = DType::R;
    } else if (const auto* p = std::get_if<ParameterNode>(&n.kind)) {
      if (n.inputs.size() != static_cast<std::size_t>(param_sig_arity(p->sig)))
        throw TypeMismatch(id, "parameter arity");
      if (an.types[n.inputs[0]] != DType::S)
        throw TypeMismatch(id, "parameter expects S input");
      if (p->sig == ParamSig::sa_to_r && an.types[n.inputs[1]] != DType::Z)
        throw TypeMismatch(id, "parameter expects Z as second input");
      an.types[id] = param_sig_output(p->sig);
    } else if (const auto* op = std::get_if<OperationNode>(&n.kind)) {
      std::vector<DType> in;
      in.reserve(n.inputs.size());
      for (int src : n.inputs) in.push_back(an.types[src]);
      auto pick = reg.resolve(op->op, in);
      if (!pick) {
        std::string have;
        for (DType t : in) have += std::string(have.empty() ? "" : ", ") + dtype_name(t);
        throw TypeMismatch(id, "no signature of '" + op->op + "' matches (" + have + ")");
      }
      an.overload[id] = *pick;
      an.types[id] = reg.find(op->op)->overloads[*pick].out;
    } else {
      if (n.inputs.size() != 1) throw TypeMismatch(id, "output arity");
      if (an.types[n.inputs[0]] != DType::R)
        throw TypeMismatch(id, "output must receive R");
      an.types[id] = DType::R;
      an.output_node = id;
    }
  }

  std::map<int, DType> types;
  for (int id = 0; id < g.size(); ++id) types[id] = an.types[id];
  if (out) {
    // Reverse reachability from the output.
    an.reachable.assign(g.nodes.size(), false);
    if (an.output_node >= 0) {
      std::vector<int> stack{an.output_node};
      an.reachable[an.output_node] = true;
      while (!stack.empty()) {
        int id = stack.back();
        stack.pop_back();
        for (int src : g.nodes[id].inputs)
          if (!an.reachable[src]) {
            an.reachable[src] = true;
            stack.push_back(src);
          }
      }
    }
    *out = std::move(an);
  }
  return types;
}

/// Structural + type validation. Failures are diagnostics, not exceptions.
inline ValidationReport validate(const Graph& g,
                                 const OperatorRegistry& reg = OperatorRegistry::standard()) {
  ValidationReport report;
  auto error = [&](int node, const std::string& msg) {
    report.diagnostics.push_back({node, Severity::error, msg});
  };

  int outputs = 0;
  for (int id = 0; id < g.size(); ++id) {
    const Node& n = g.nodes[id];
    for (int src : n.inputs)
      if (src < 0 || src >= g.size()) error(id, "edge to nonexistent node");
    if (std::holds_alternative<OutputNode>(n.kind)) ++outputs;
    int arity = detail::expected_arity(g, n, reg);
    if (arity == -2) {
      error(id, "unknown op '" + std::get<OperationNode>(n.kind).op + "'");
    } else if (arity >= 0 && static_cast<int>(n.inputs.size()) != arity) {
      error(id, "arity mismatch: expected " + std::to_string(arity) + ", got " +
                    std::to_string(n.inputs.size()));
    }
    if (const auto* in = std::get_if<InputNode>(&n.kind)) {
      if (!input_symbol_type(g, in->symbol))
        error(id, "unknown input symbol '" + in->symbol + "'");
    }
  }
  if (outputs != 1) error(-1, "graph must have exactly one Output node, found " +
                                  std::to_string(outputs));
  if (!report.diagnostics.empty()) return report;

  GraphAnalysis an;
  try {
    auto types = infer_types(g, reg, &an);
    report.inferred_types = std::move(types);
  } catch (const CycleDetected& c) {
    for (int id : c.offending) error(id, "cycle through this node");
    return report;
  } catch (const TypeMismatch& m) {
    error(m.node, m.what());
    return report;
  }

  for (int id = 0; id < g.size(); ++id)
    if (!an.reachable[id])
      report.diagnostics.push_back({id, Severity::warning, "unused node"});

  report.ok = true;
  for (const auto& d : report.diagnostics)
    if (d.severity == Severity::error) report.ok = false;
  return report;
}

/// Analysis for evaluation; requires a graph that validates.
inline GraphAnalysis analyze(const Graph& g,
                             const OperatorRegistry& reg = OperatorRegistry::standard()) {
  GraphAnalysis an;
  infer_types(g, reg, &an);
  if (an.output_node < 0) throw TypeError("graph has no Output node");
  return an;
}

/// Input symbols and parameter store keys reachable from the Output node.
inline std::set<std::string> free_symbols(const Graph& g) {
  GraphAnalysis an;
  infer_types(g, OperatorRegistry::standard(), &an);
  std::set<std::string> out;
  for (int id = 0; id < g.size(); ++id) {
    if (!an.reachable.empty() && !an.reachable[id]) continue;
    if (const auto* in = std::get_if<InputNode>(&g.nodes[id].kind))
      out.insert(in->symbol);
    else if (const auto* p = std::get_if<ParameterNode>(&g.nodes[id].kind))
      out.insert(p->store_key);
  }
  return out;
}

}  // namespace lossdag

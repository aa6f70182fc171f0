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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lossdag/value.hpp"

namespace lossdag {

/// What a Parameter node computes. A Gaussian policy network has two heads;
/// `gauss_mean` and `gauss_logstd` address the same underlying store entry.
enum class ParamSig {
  s_to_r,        // S -> R            (value function)
  s_to_list,     // S -> List[R]      (per-action Q / logits)
  sa_to_r,       // S x Z -> R        (continuous Q)
  s_to_a,        // S -> Z            (deterministic bounded policy)
  gauss_mean,    // S -> Z            (mean head of a Gaussian policy)
  gauss_logstd,  // S -> Z            (log-std head of a Gaussian policy)
};

inline const char* param_sig_name(ParamSig s) {
  switch (s) {
    case ParamSig::s_to_r: return "s_to_r";
    case ParamSig::s_to_list: return "s_to_list";
    case ParamSig::sa_to_r: return "sa_to_r";
    case ParamSig::s_to_a: return "s_to_a";
    case ParamSig::gauss_mean: return "gauss_mean";
    case ParamSig::gauss_logstd: return "gauss_logstd";
  }
  return "?";
}

inline std::optional<ParamSig> param_sig_from_name(const std::string& s) {
  if (s == "s_to_r") return ParamSig::s_to_r;
  if (s == "s_to_list") return ParamSig::s_to_list;
  if (s == "sa_to_r") return ParamSig::sa_to_r;
  if (s == "s_to_a") return ParamSig::s_to_a;
  if (s == "gauss_mean") return ParamSig::gauss_mean;
  if (s == "gauss_logstd") return ParamSig::gauss_logstd;
  return std::nullopt;
}

inline int param_sig_arity(ParamSig s) { return s == ParamSig::sa_to_r ? 2 : 1; }

inline DType param_sig_output(ParamSig s) {
  switch (s) {
    case ParamSig::s_to_r:
    case ParamSig::sa_to_r: return DType::R;
    case ParamSig::s_to_list: return DType::ListR;
    default: return DType::Z;
  }
}

struct InputNode {
  std::string symbol;
};

struct ConstantNode {
  double value = 0.0;
  std::string label;  // empty, or a hyperparameter name resolved at bind time
};

struct ParameterNode {
  std::string store_key;
  ParamSig sig = ParamSig::s_to_r;
};

struct OperationNode {
  std::string op;
};

struct OutputNode {};

using NodeKind =
    std::variant<InputNode, ConstantNode, ParameterNode, OperationNode, OutputNode>;

struct Node {
  NodeKind kind;
  std::vector<int> inputs;  // ordered; order is significant (Subtract, Div)
};

/// A loss function as a typed DAG. Node ids are dense indices into `nodes`.
/// Graphs are immutable once validated; mutation code always builds fresh
/// copies.
struct Graph {
  std::string name;
  std::vector<Node> nodes;
  std::string loss_target;  // store key the gradient step updates
  std::map<std::string, std::string> metadata;

  int add(NodeKind kind, std::vector<int> inputs = {}) {
    nodes.push_back(Node{std::move(kind), std::move(inputs)});
    return static_cast<int>(nodes.size()) - 1;
  }

  int input(const std::string& symbol) { return add(InputNode{symbol}); }
  int constant(double v, const std::string& label = "") {
    return add(ConstantNode{v, label});
  }
  int param(const std::string& key, ParamSig sig, std::vector<int> in) {
    return add(ParameterNode{key, sig}, std::move(in));
  }
  int op(const std::string& op_id, std::vector<int> in) {
    return add(OperationNode{op_id}, std::move(in));
  }
  int output(int in) { return add(OutputNode{}, {in}); }

  const Node& node(int id) const { return nodes.at(static_cast<std::size_t>(id)); }
  int size() const { return static_cast<int>(nodes.size()); }
};

// Built-in input symbols and their types. d_t carries termination flags as
// floats so it can enter arithmetic directly; `adv` / `ret` are the
// advantage and reward-to-go sequences prepared by the trainer; `xi` and
// `eps` are per-evaluation Gaussian draws.
inline const std::map<std::string, DType>& builtin_input_symbols() {
  static const std::map<std::string, DType> table = {
      {"s_t", DType::S},    {"a_t", DType::Z},   {"r_t", DType::R},
      {"d_t", DType::R},    {"s_tp1", DType::S}, {"gamma", DType::R},
      {"lambda", DType::R}, {"adv", DType::R},   {"ret", DType::R},
      {"xi", DType::Z},     {"eps", DType::Z},
  };
  return table;
}

/// Type of an input symbol, honoring per-graph extras declared in metadata
/// as `input.<symbol> = S|Z|R`.
inline std::optional<DType> input_symbol_type(const Graph& g, const std::string& symbol) {
  const auto& builtins = builtin_input_symbols();
  if (auto it = builtins.find(symbol); it != builtins.end()) return it->second;
  if (auto it = g.metadata.find("input." + symbol); it != g.metadata.end()) {
    if (it->second == "S") return DType::S;
    if (it->second == "Z") return DType::Z;
    if (it->second == "R") return DType::R;
  }
  return std::nullopt;
}

}  // namespace lossdag

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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lossdag/value.hpp"

namespace lossdag {

/// One admissible instantiation of an operator: input dtypes, output dtype,
/// and which input ports carry gradient. Overloads are tried in order.
struct Overload {
  std::vector<DType> in;
  DType out;
  std::vector<bool> diff;  // per input port
};

struct OpSignature {
  std::string id;
  int arity = 0;
  std::vector<Overload> overloads;
  bool differentiable = true;  // false: output is discrete, no gradient at all
};

/// Compiled-in operator table. Op ids are the stable strings used by the
/// graph file format; the table is extensible at runtime for tests.
class OperatorRegistry {
 public:
  void add(OpSignature sig) { table_[sig.id] = std::move(sig); }

  bool contains(const std::string& id) const { return table_.count(id) > 0; }

  const OpSignature* find(const std::string& id) const {
    auto it = table_.find(id);
    return it == table_.end() ? nullptr : &it->second;
  }

  /// Index of the first overload matching `in`, or nullopt.
  std::optional<int> resolve(const std::string& id, const std::vector<DType>& in) const {
    const OpSignature* sig = find(id);
    if (!sig) return std::nullopt;
    for (std::size_t i = 0; i < sig->overloads.size(); ++i) {
      if (sig->overloads[i].in == in) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    out.reserve(table_.size());
    for (const auto& [k, v] : table_) out.push_back(k);
    return out;
  }

  static const OperatorRegistry& standard() {
    static const OperatorRegistry reg = make_standard();
    return reg;
  }

 private:
  std::map<std::string, OpSignature> table_;

  static OperatorRegistry make_standard() {
    OperatorRegistry reg;
    const DType R = DType::R, Z = DType::Z, L = DType::ListR;

    auto elementwise2 = [&](const std::string& id, bool with_z) {
      OpSignature s{id, 2, {}, true};
      s.overloads.push_back({{R, R}, R, {true, true}});
      s.overloads.push_back({{L, L}, L, {true, true}});
      s.overloads.push_back({{L, R}, L, {true, true}});
      s.overloads.push_back({{R, L}, L, {true, true}});
      if (with_z) s.overloads.push_back({{Z, Z}, Z, {true, true}});
      reg.add(std::move(s));
    };
    elementwise2("add", true);
    elementwise2("subtract", true);
    elementwise2("multiply", false);
    elementwise2("div", false);
    elementwise2("min", false);
    elementwise2("max", false);

    auto elementwise1 = [&](const std::string& id, bool with_z) {
      OpSignature s{id, 1, {}, true};
      s.overloads.push_back({{R}, R, {true}});
      s.overloads.push_back({{L}, L, {true}});
      if (with_z) s.overloads.push_back({{Z}, Z, {true}});
      reg.add(std::move(s));
    };
    elementwise1("neg", true);
    elementwise1("abs", false);
    elementwise1("square", false);
    elementwise1("log", false);
    elementwise1("exp", false);

    reg.add({"min_pair", 2, {{{R, R}, R, {true, true}}}, true});
    reg.add({"mean_batch", 1, {{{R}, R, {true}}}, true});
    reg.add({"select_list", 2, {{{L, Z}, R, {true, false}}}, true});
    reg.add({"max_list", 1, {{{L}, R, {true}}}, true});
    reg.add({"arg_max_list", 1, {{{L}, Z, {false}}}, false});
    reg.add({"dot_product", 2, {{{L, L}, R, {true, true}}}, true});
    reg.add({"softmax", 1, {{{L}, L, {true}}}, true});

    reg.add({"sum_and_discount", 2, {{{R, R}, R, {true, true}}}, true});
    reg.add({"clip", 3,
             {{{R, R, R}, R, {true, true, true}},
              {{L, R, R}, L, {true, true, true}},
              {{Z, R, R}, Z, {true, true, true}}},
             true});
    reg.add({"squashing", 3, {{{Z, Z, Z}, Z, {true, true, true}}}, true});

    // Density of an action under a policy head: categorical (logits, action)
    // or diagonal Gaussian (mean, logstd, action). The *_squashed forms add
    // the tanh change-of-variables correction.
    for (const char* id : {"prob", "log_prob"}) {
      OpSignature s{id, -1, {}, true};  // arity depends on the overload
      s.overloads.push_back({{L, Z}, R, {true, false}});
      s.overloads.push_back({{Z, Z, Z}, R, {true, true, true}});
      reg.add(std::move(s));
    }
    reg.add({"prob_squashed", 3, {{{Z, Z, Z}, R, {true, true, true}}}, true});
    reg.add({"log_prob_squashed", 3, {{{Z, Z, Z}, R, {true, true, true}}}, true});
    return reg;
  }
};

}  // namespace lossdag

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

#include <string>
#include <vector>

#include "lossdag/errors.hpp"

namespace lossdag {

/// Port data types of the graph language. S = environment state,
/// Z = action (discrete index or bounded continuous vector), R = float,
/// ListR / ListS = homogeneous lists of floats / states.
enum class DType { S, Z, R, ListR, ListS };

inline const char* dtype_name(DType t) {
  switch (t) {
    case DType::S: return "S";
    case DType::Z: return "Z";
    case DType::R: return "R";
    case DType::ListR: return "List[R]";
    case DType::ListS: return "List[S]";
  }
  return "?";
}

/// Runtime datum. `width` is the per-sample payload width (R: 1, S: state
/// width, Z: 1 for a discrete index or the action width, ListR: list length).
/// An optional leading batch/time axis of length `batch` holds a sequence of
/// consecutive timesteps or an i.i.d. minibatch.
struct Value {
  DType dtype = DType::R;
  bool batched = false;
  int batch = 1;
  int width = 1;
  bool discrete = false;  // Z only: payload holds an index
  std::vector<double> data;

  int rows() const { return batched ? batch : 1; }

  double scalar() const {
    if (dtype != DType::R || batched || data.size() != 1)
      throw ShapeError("scalar() on non-scalar value");
    return data[0];
  }

  const double* row(int i) const { return data.data() + std::size_t(i) * width; }
  double* row(int i) { return data.data() + std::size_t(i) * width; }

  static Value scalar_r(double v) {
    Value out;
    out.dtype = DType::R;
    out.data = {v};
    return out;
  }

  static Value batched_r(std::vector<double> v) {
    Value out;
    out.dtype = DType::R;
    out.batched = true;
    out.batch = static_cast<int>(v.size());
    out.data = std::move(v);
    return out;
  }

  static Value discrete_z(double index) {
    Value out;
    out.dtype = DType::Z;
    out.discrete = true;
    out.data = {index};
    return out;
  }

  static Value list_r(std::vector<double> v) {
    Value out;
    out.dtype = DType::ListR;
    out.width = static_cast<int>(v.size());
    out.data = std::move(v);
    return out;
  }

  static Value vec(DType t, std::vector<double> v) {
    Value out;
    out.dtype = t;
    out.width = static_cast<int>(v.size());
    out.data = std::move(v);
    return out;
  }
};

}  // namespace lossdag

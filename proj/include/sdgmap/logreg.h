// Copyright 2026 The sdgmap Authors.
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

#ifndef SDGMAP_LOGREG_H_
#define SDGMAP_LOGREG_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sdgmap/tfidf.h"

namespace sdgmap {

struct LogRegHyperparams {
  double l2 = 1e-4;
  double learning_rate = 0.5;
  int iterations = 500;
  uint64_t seed = 42;
  // Negatives sampled per positive when building weak-supervision sets.
  double negative_ratio = 10.0;

  bool operator==(const LogRegHyperparams &) const = default;
};

// Logistic sigmoid, clamped to the open interval (0, 1).
double Sigmoid(double z);

// Binary logistic model over a sparse feature space.
struct BinaryModel {
  std::vector<double> weights;
  double bias = 0.0;

  double Logit(const SparseVector &x) const { return x.Dot(weights) + bias; }
  double Score(const SparseVector &x) const { return Sigmoid(Logit(x)); }

  bool operator==(const BinaryModel &) const = default;
};

struct LossGradient {
  double loss = 0.0;
  std::vector<double> weights;
  double bias = 0.0;
};

// Mean binary cross-entropy plus (l2 / 2) * |w|^2, and its gradient.
// The bias is not regularized.
LossGradient ComputeLossGradient(const BinaryModel &model, std::span<const SparseVector> features,
                                 std::span<const int> labels, double l2);

struct TrainResult {
  BinaryModel model;
  // Loss before each update, followed by the final loss.
  std::vector<double> loss_history;
};

// Full-batch gradient descent from zero weights. Throws TrainingError if the
// loss becomes non-finite and ConfigError on invalid inputs.
TrainResult TrainBinary(std::span<const SparseVector> features, std::span<const int> labels,
                        size_t dimension, const LogRegHyperparams &params);

}  // namespace sdgmap

#endif  // SDGMAP_LOGREG_H_

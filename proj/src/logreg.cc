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

#include "sdgmap/logreg.h"

#include <cmath>
#include <limits>

#include "sdgmap/error.h"

namespace sdgmap {
namespace {

// log(1 + e^z) without overflow.
double Softplus(double z) { return std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))); }

}  // namespace

double Sigmoid(double z) {
  double p = z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
  constexpr double kLow = std::numeric_limits<double>::min();
  const double high = std::nextafter(1.0, 0.0);
  return std::clamp(p, kLow, high);
}

LossGradient ComputeLossGradient(const BinaryModel &model, std::span<const SparseVector> features,
                                 std::span<const int> labels, double l2) {
  const size_t n = features.size();
  LossGradient out;
  out.weights.assign(model.weights.size(), 0.0);
  double data_loss = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double z = model.Logit(features[i]);
    double y = labels[i] ? 1.0 : 0.0;
    data_loss += Softplus(z) - y * z;
    // d/dz of the per-example loss; unclamped so the gradient stays exact.
    double residual = (z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z))) - y;
    const SparseVector &x = features[i];
    for (size_t k = 0; k < x.indices.size(); ++k) out.weights[x.indices[k]] += residual * x.values[k];
    out.bias += residual;
  }
  const double inv_n = n ? 1.0 / static_cast<double>(n) : 0.0;
  double norm2 = 0.0;
  for (size_t j = 0; j < out.weights.size(); ++j) {
    out.weights[j] = out.weights[j] * inv_n + l2 * model.weights[j];
    norm2 += model.weights[j] * model.weights[j];
  }
  out.bias *= inv_n;
  out.loss = data_loss * inv_n + 0.5 * l2 * norm2;
  return out;
}

TrainResult TrainBinary(std::span<const SparseVector> features, std::span<const int> labels,
                        size_t dimension, const LogRegHyperparams &params) {
  if (features.size() != labels.size()) throw ConfigError("feature and label counts differ");
  if (params.iterations < 0) throw ConfigError("iterations must be nonnegative");
  if (!(params.learning_rate > 0.0)) throw ConfigError("learning rate must be positive");
  if (!(params.l2 >= 0.0)) throw ConfigError("l2 strength must be nonnegative");
  size_t positives = 0;
  for (int y : labels) positives += y ? 1 : 0;
  if (positives == 0 || positives == labels.size()) {
    throw ConfigError("training needs at least one positive and one negative example");
  }
  for (const SparseVector &x : features) {
    if (!x.indices.empty() && x.indices.back() >= dimension) {
      throw ConfigError("feature index outside the model dimension");
    }
  }

  TrainResult result;
  result.model.weights.assign(dimension, 0.0);
  for (int it = 0; it <= params.iterations; ++it) {
    LossGradient g = ComputeLossGradient(result.model, features, labels, params.l2);
    if (!std::isfinite(g.loss)) {
      throw TrainingError("non-finite loss at iteration " + std::to_string(it) +
                          " (learning rate " + std::to_string(params.learning_rate) + ")");
    }
    result.loss_history.push_back(g.loss);
    if (it == params.iterations) break;
    for (size_t j = 0; j < dimension; ++j) result.model.weights[j] -= params.learning_rate * g.weights[j];
    result.model.bias -= params.learning_rate * g.bias;
  }
  return result;
}

}  // namespace sdgmap

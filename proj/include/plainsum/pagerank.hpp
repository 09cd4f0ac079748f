#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "plainsum/error.hpp"

namespace plainsum {

using Matrix = std::vector<std::vector<double>>;

struct PageRankResult {
  std::vector<double> scores;  // sums to 1
  std::size_t iterations = 0;
  bool converged = false;
};

/// Damped power iteration on a non-negative weighted graph. Each node passes
/// its score along outgoing edges in proportion to their weights; nodes with
/// no outgoing weight spread theirs uniformly.
inline PageRankResult pagerank(const Matrix& weights, double damping = 0.85, double tolerance = 1e-6,
                               std::size_t max_iterations = 100) {
  const std::size_t n = weights.size();
  for (const auto& row : weights)
    if (row.size() != n) throw ArgumentError("weight matrix must be square");
  PageRankResult result;
  if (n == 0) return result;

  std::vector<double> out_weight(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      if (weights[j][i] < 0.0) throw ArgumentError("weights must be non-negative");
      out_weight[j] += weights[j][i];
    }

  const double nd = static_cast<double>(n);
  std::vector<double> score(n, 1.0 / nd), next(n);
  while (result.iterations < max_iterations) {
    double dangling = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (out_weight[j] == 0.0) dangling += score[j];
    for (std::size_t i = 0; i < n; ++i) {
      double incoming = dangling / nd;
      for (std::size_t j = 0; j < n; ++j)
        if (out_weight[j] > 0.0) incoming += weights[j][i] / out_weight[j] * score[j];
      next[i] = (1.0 - damping) / nd + damping * incoming;
    }
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - score[i]));
    score.swap(next);
    ++result.iterations;
    if (delta < tolerance) {
      result.converged = true;
      break;
    }
  }
  double sum = 0.0;
  for (double s : score) sum += s;
  for (double& s : score) s /= sum;
  result.scores = std::move(score);
  return result;
}

}  // namespace plainsum

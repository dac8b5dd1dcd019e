#pragma once

#include <cstddef>
#include <vector>

namespace rdd {

// Explicit n x n metric plus optional point-mass measures. Desk-scale input
// for the brute-force oracles; construction checks the metric axioms
// (zero diagonal, symmetry, positivity off the diagonal, triangle inequality).
class FiniteMetricSpace {
 public:
  FiniteMetricSpace(std::size_t n, std::vector<double> distances,
                    std::vector<std::vector<double>> measures = {});

  std::size_t size() const { return n_; }
  double distance(std::size_t i, std::size_t j) const {
    return distances_[i * n_ + j];
  }
  const std::vector<std::vector<double>>& measures() const { return measures_; }
  double diameter() const;

 private:
  std::size_t n_;
  std::vector<double> distances_;  // row-major n*n
  std::vector<std::vector<double>> measures_;
};

}  // namespace rdd

#include "rdd/metric_space.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "rdd/validation.hpp"

namespace rdd {

namespace {

std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

FiniteMetricSpace::FiniteMetricSpace(std::size_t n, std::vector<double> distances,
                                     std::vector<std::vector<double>> measures)
    : n_(n), distances_(std::move(distances)), measures_(std::move(measures)) {
  if (n_ == 0) throw ValidationError("metric space: needs at least one point");
  if (distances_.size() != n_ * n_) {
    throw ValidationError("metric space: distance matrix must be " +
                          std::to_string(n_) + "x" + std::to_string(n_));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (distance(i, i) != 0.0) {
      throw ValidationError("metric space: nonzero diagonal at " + std::to_string(i));
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const double d = distance(i, j);
      if (!std::isfinite(d) || d < 0.0) {
        throw ValidationError("metric space: entry " + pair_label(i, j) +
                              " is negative or non-finite");
      }
      if (i != j && d == 0.0) {
        throw ValidationError("metric space: distinct points " + pair_label(i, j) +
                              " at distance 0");
      }
      if (distance(j, i) != d) {
        throw ValidationError("metric space: asymmetry at " + pair_label(i, j));
      }
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (distance(i, k) > distance(i, j) + distance(j, k)) {
          throw ValidationError("metric space: triangle inequality fails for (" +
                                std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ")");
        }
      }
    }
  }
  for (std::size_t m = 0; m < measures_.size(); ++m) {
    if (measures_[m].size() != n_) {
      throw ValidationError("metric space: measure " + std::to_string(m) +
                            " has wrong length");
    }
    for (double mass : measures_[m]) {
      if (!std::isfinite(mass) || mass < 0.0) {
        throw ValidationError("metric space: measure " + std::to_string(m) +
                              " has a negative or non-finite mass");
      }
    }
  }
}

double FiniteMetricSpace::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      best = std::max(best, distance(i, j));
  return best;
}

}  // namespace rdd

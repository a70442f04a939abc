#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace sdspect::nn {

using Shape = std::vector<std::size_t>;

inline std::size_t shape_numel(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

// Dense row-major tensor of doubles.
struct Tensor {
  Shape shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(Shape s) : shape(std::move(s)), data(shape_numel(shape), 0.0) {}

  static Tensor zeros(Shape s) { return Tensor(std::move(s)); }

  std::size_t numel() const { return data.size(); }
  bool empty() const { return data.empty(); }
  void fill(double v) { std::fill(data.begin(), data.end(), v); }

  double* ptr() { return data.data(); }
  const double* ptr() const { return data.data(); }
};

}  // namespace sdspect::nn

#pragma once

#include <array>
#include <cstddef>

namespace fracsmooth {

// Discrete periodic domain [0,L)^d sampled at N points per axis.  The dual
// frequency lattice is k/L with integer k in [-N/2, N/2-1] per component,
// stored in DFT order (index i maps to k = i for i < N/2, k = i - N above).
struct TorusGrid {
  int dim = 1;             // 1 or 2
  int points_per_axis = 8; // N, even, >= 8
  double side_length = 1.0;

  TorusGrid() = default;
  TorusGrid(int d, int n, double length = 1.0);

  std::size_t total_points() const;
  double nyquist_radius() const { return points_per_axis / (2.0 * side_length); }
  double spacing() const { return side_length / points_per_axis; }
  // Riemann cell measure (L/N)^d
  double cell_measure() const;

  // signed integer frequency for one per-axis array index
  int freq_component(int axis_index) const;
  // integer frequency vector of a flat row-major lattice index (second entry 0 when dim == 1)
  std::array<int, 2> freq_vector(std::size_t flat) const;
  // physical frequency xi = k/L as a vector
  std::array<double, 2> freq_point(std::size_t flat) const;
  // Euclidean |k/L|
  double freq_radius(std::size_t flat) const;
  // flat index of the reflected frequency -k (component-wise mod N)
  std::size_t negated_index(std::size_t flat) const;
  // flat index of an integer frequency vector (components reduced mod N)
  std::size_t index_of_freq(int k0, int k1 = 0) const;

  bool operator==(const TorusGrid &) const = default;
};

} // namespace fracsmooth

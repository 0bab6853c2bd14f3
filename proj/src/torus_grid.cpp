#include "fracsmooth/torus_grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fracsmooth {

TorusGrid::TorusGrid(int d, int n, double length)
    : dim(d), points_per_axis(n), side_length(length) {
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("TorusGrid: dim must be 1 or 2, got " + std::to_string(d));
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("TorusGrid: N must be even and >= 8, got " + std::to_string(n));
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("TorusGrid: side length must be positive");
}

std::size_t TorusGrid::total_points() const {
  std::size_t n = static_cast<std::size_t>(points_per_axis);
  return dim == 1 ? n : n * n;
}

double TorusGrid::cell_measure() const {
  double h = spacing();
  return dim == 1 ? h : h * h;
}

int TorusGrid::freq_component(int axis_index) const {
  return axis_index < points_per_axis / 2 ? axis_index : axis_index - points_per_axis;
}

std::array<int, 2> TorusGrid::freq_vector(std::size_t flat) const {
  if (dim == 1) return {freq_component(static_cast<int>(flat)), 0};
  int n = points_per_axis;
  int i0 = static_cast<int>(flat) / n;
  int i1 = static_cast<int>(flat) % n;
  return {freq_component(i0), freq_component(i1)};
}

std::array<double, 2> TorusGrid::freq_point(std::size_t flat) const {
  auto k = freq_vector(flat);
  return {k[0] / side_length, k[1] / side_length};
}

double TorusGrid::freq_radius(std::size_t flat) const {
  auto xi = freq_point(flat);
  return dim == 1 ? std::abs(xi[0]) : std::hypot(xi[0], xi[1]);
}

std::size_t TorusGrid::negated_index(std::size_t flat) const {
  int n = points_per_axis;
  if (dim == 1) {
    int i = static_cast<int>(flat);
    return static_cast<std::size_t>((n - i) % n);
  }
  int i0 = static_cast<int>(flat) / n;
  int i1 = static_cast<int>(flat) % n;
  return static_cast<std::size_t>(((n - i0) % n)) * n + ((n - i1) % n);
}

std::size_t TorusGrid::index_of_freq(int k0, int k1) const {
  int n = points_per_axis;
  auto wrap = [n](int k) { return ((k % n) + n) % n; };
  if (dim == 1) return static_cast<std::size_t>(wrap(k0));
  return static_cast<std::size_t>(wrap(k0)) * n + wrap(k1);
}

} // namespace fracsmooth

#pragma once

#include <vector>

#include "ppve/geometry.hpp"
#include "ppve/parallel.hpp"
#include "ppve/types.hpp"

namespace ppve {

// Tensor-product midpoint rule over a box; f maps a point to T (double or a
// fixed-capacity Eigen type).  Parallel with deterministic block reduction.
template <class T, class F>
T integrate_midpoint(const Window& w, const std::vector<int>& counts, T zero, F&& f) {
  const Grid g(w, counts);
  T total = par::blocked_sum<T>(
      g.node_count(), std::move(zero), [&](std::int64_t i) { return f(g.node(i)); });
  return total * g.cell_volume();
}

// Serial reference for the kernel above (plain accumulation in node order).
template <class T, class F>
T integrate_midpoint_serial(const Window& w, const std::vector<int>& counts, T zero, F&& f) {
  const Grid g(w, counts);
  T total = std::move(zero);
  for (std::int64_t i = 0; i < g.node_count(); ++i) total += f(g.node(i));
  return total * g.cell_volume();
}

// Per-axis node counts for intensity integrals: 256 for the planar case,
// reduced in higher dimension to keep the total node count bounded.
inline std::vector<int> calibration_counts(int d) {
  int per_axis;
  switch (d) {
    case 1:
    case 2: per_axis = 256; break;
    case 3: per_axis = 128; break;
    case 4: per_axis = 48; break;
    case 5: per_axis = 24; break;
    default: per_axis = 16; break;
  }
  return std::vector<int>(static_cast<std::size_t>(d), per_axis);
}

// Probe grid for locating intensity maxima: at most 128 nodes per axis and
// roughly 2e6 nodes in total.
inline std::vector<int> probe_counts(int d, int per_axis_override = 0) {
  int per_axis = per_axis_override;
  if (per_axis <= 0) {
    per_axis = 128;
    double total = 1.0;
    for (int j = 0; j < d; ++j) total *= per_axis;
    while (total > 2e6 && per_axis > 4) {
      --per_axis;
      total = 1.0;
      for (int j = 0; j < d; ++j) total *= per_axis;
    }
  }
  return std::vector<int>(static_cast<std::size_t>(d), per_axis);
}

}  // namespace ppve

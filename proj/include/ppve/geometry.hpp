#pragma once

#include <cstdint>
#include <vector>

#include "ppve/rng.hpp"
#include "ppve/types.hpp"

namespace ppve {

// Axis-aligned closed box observation window.
class Window {
 public:
  Window(Vec lower, Vec upper);

  int dim() const { return static_cast<int>(lower_.size()); }
  const Vec& lower() const { return lower_; }
  const Vec& upper() const { return upper_; }
  double side(int axis) const { return upper_[axis] - lower_[axis]; }
  double min_side() const;
  double volume() const;
  Vec center() const { return 0.5 * (lower_ + upper_); }

  // Boundary points count as inside.
  bool contains(const Vec& u) const;

  // Box shrunk by r on every face; throws EmptyErosion if a side collapses.
  Window erode(double r) const;
  // Box grown by r on every face.
  Window dilate(double r) const;

  bool operator==(const Window& o) const {
    return lower_ == o.lower_ && upper_ == o.upper_;
  }

 private:
  Vec lower_;
  Vec upper_;
};

// Regular cell-centre grid over a window.  Nodes are indexed row-major with
// the last axis fastest; coordinates are computed on demand, nothing is
// stored per node.
class Grid {
 public:
  Grid(Window window, std::vector<int> counts);

  const Window& window() const { return window_; }
  int dim() const { return window_.dim(); }
  const std::vector<int>& counts() const { return counts_; }
  const Vec& spacing() const { return spacing_; }
  std::int64_t node_count() const { return node_count_; }
  double cell_volume() const { return cell_volume_; }

  Vec node(std::int64_t flat) const;
  std::vector<int> multi_index(std::int64_t flat) const;
  std::int64_t flat_index(const std::vector<int>& idx) const;

  // Index of the cell containing coordinate x on the given axis (equals the
  // nearest cell centre), clamped to the grid.
  int axis_cell(int axis, double x) const;

 private:
  Window window_;
  std::vector<int> counts_;
  Vec spacing_;
  std::int64_t node_count_;
  double cell_volume_;
};

Grid regular_grid(const Window& w, std::vector<int> counts);
Grid regular_grid(const Window& w, int per_axis);

// One point with independent uniform coordinates on each side.
Vec uniform_sample(const Window& w, Rng& rng);

}  // namespace ppve

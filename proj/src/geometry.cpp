#include "ppve/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ppve/errors.hpp"

namespace ppve {

Window::Window(Vec lower, Vec upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size() || lower_.size() < 1) {
    throw std::invalid_argument("Window: lower/upper must have equal dimension >= 1");
  }
  for (int j = 0; j < dim(); ++j) {
    if (!(lower_[j] < upper_[j])) {
      throw std::invalid_argument("Window: lower must be strictly below upper on every axis");
    }
  }
}

double Window::min_side() const {
  double m = side(0);
  for (int j = 1; j < dim(); ++j) m = std::min(m, side(j));
  return m;
}

double Window::volume() const {
  double v = 1.0;
  for (int j = 0; j < dim(); ++j) v *= side(j);
  return v;
}

bool Window::contains(const Vec& u) const {
  for (int j = 0; j < dim(); ++j) {
    if (u[j] < lower_[j] || u[j] > upper_[j]) return false;
  }
  return true;
}

Window Window::erode(double r) const {
  if (r < 0) throw std::invalid_argument("Window::erode: negative radius");
  for (int j = 0; j < dim(); ++j) {
    if (2 * r >= side(j)) throw EmptyErosion("Window::erode: erosion empties the box");
  }
  return Window(lower_.array() + r, upper_.array() - r);
}

Window Window::dilate(double r) const {
  if (r < 0) throw std::invalid_argument("Window::dilate: negative radius");
  return Window(lower_.array() - r, upper_.array() + r);
}

Grid::Grid(Window window, std::vector<int> counts)
    : window_(std::move(window)), counts_(std::move(counts)) {
  if (static_cast<int>(counts_.size()) != window_.dim()) {
    throw std::invalid_argument("Grid: counts dimension mismatch");
  }
  spacing_.resize(window_.dim());
  node_count_ = 1;
  for (int j = 0; j < window_.dim(); ++j) {
    if (counts_[j] < 1) throw std::invalid_argument("Grid: counts must be positive");
    spacing_[j] = window_.side(j) / counts_[j];
    node_count_ *= counts_[j];
  }
  cell_volume_ = window_.volume() / static_cast<double>(node_count_);
}

Vec Grid::node(std::int64_t flat) const {
  Vec u(dim());
  for (int j = dim() - 1; j >= 0; --j) {
    const std::int64_t i = flat % counts_[j];
    flat /= counts_[j];
    u[j] = window_.lower()[j] + (static_cast<double>(i) + 0.5) * spacing_[j];
  }
  return u;
}

std::vector<int> Grid::multi_index(std::int64_t flat) const {
  std::vector<int> idx(static_cast<std::size_t>(dim()));
  for (int j = dim() - 1; j >= 0; --j) {
    idx[static_cast<std::size_t>(j)] = static_cast<int>(flat % counts_[j]);
    flat /= counts_[j];
  }
  return idx;
}

std::int64_t Grid::flat_index(const std::vector<int>& idx) const {
  std::int64_t flat = 0;
  for (int j = 0; j < dim(); ++j) {
    flat = flat * counts_[j] + idx[static_cast<std::size_t>(j)];
  }
  return flat;
}

int Grid::axis_cell(int axis, double x) const {
  const double t = (x - window_.lower()[axis]) / spacing_[axis];
  int i = static_cast<int>(std::floor(t));
  return std::clamp(i, 0, counts_[axis] - 1);
}

Grid regular_grid(const Window& w, std::vector<int> counts) {
  return Grid(w, std::move(counts));
}

Grid regular_grid(const Window& w, int per_axis) {
  return Grid(w, std::vector<int>(static_cast<std::size_t>(w.dim()), per_axis));
}

Vec uniform_sample(const Window& w, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vec u(w.dim());
  for (int j = 0; j < w.dim(); ++j) {
    u[j] = w.lower()[j] + unit(rng) * w.side(j);
  }
  return u;
}

}  // namespace ppve

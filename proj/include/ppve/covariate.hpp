#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "ppve/geometry.hpp"
#include "ppve/types.hpp"

namespace ppve {

// Covariate field z: R^d -> R^p with the divergence operators used
// throughout: div of a scalar function is the SUM of its first partial
// derivatives (not a gradient), applied componentwise to vector fields, so
//   (div z)_i     = sum_j d z_i / d u_j
//   (div div z)_i = sum_{j,k} d^2 z_i / (d u_j d u_k),
// mixed partials included.
class CovariateField {
 public:
  CovariateField(int d, int p) : d_(d), p_(p) {}
  virtual ~CovariateField() = default;

  int dim() const { return d_; }
  int p() const { return p_; }

  virtual void value(const Vec& u, Vec& out) const = 0;
  virtual void div(const Vec& u, Vec& out) const = 0;
  virtual void div_div(const Vec& u, Vec& out) const = 0;

  // Override when div and div_div share work (e.g. a sincos pair).
  virtual void div_and_div_div(const Vec& u, Vec& dz, Vec& ddz) const {
    div(u, dz);
    div_div(u, ddz);
  }

  Vec value(const Vec& u) const { Vec v(p_); value(u, v); return v; }
  Vec div(const Vec& u) const { Vec v(p_); div(u, v); return v; }
  Vec div_div(const Vec& u) const { Vec v(p_); div_div(u, v); return v; }

 private:
  int d_;
  int p_;
};

using CovariatePtr = std::shared_ptr<const CovariateField>;

// The analytic intensity models of the simulation study plus the
// d-dimensional sine model ("sine") with z_i(u) = sin(4 pi u_i)/d.
// Models 1-4 are planar; "sine" accepts any d in [1, kMaxDim].
CovariatePtr builtin_covariate(const std::string& model, int d = 2);
// Parameter vector the model was studied with.
Vec builtin_theta(const std::string& model, int d = 2);
// Output dimension p of a builtin model.
int builtin_p(const std::string& model, int d = 2);

// Covariate known only at the nodes of a planar grid; derivative operators
// are central finite differences on the 3x3 subgrid centred at the node
// nearest to the query point, evaluated at that subgrid midpoint.
class GridCovariate {
 public:
  GridCovariate(Grid grid, std::vector<double> samples, int p);

  // Sample an analytic field at the grid nodes.
  static GridCovariate sample_field(const CovariateField& f, const Grid& grid);

  const Grid& grid() const { return grid_; }
  int p() const { return p_; }

  Vec value_at(int i0, int i1) const;

  // Strict operators: throw OutOfStencil when the node nearest u has no
  // complete 3x3 neighbourhood (u within one cell of the window edge).
  Vec fd_div(const Vec& u) const;
  Vec fd_div_div(const Vec& u) const;

  // Centre of the 3x3 subgrid closest to u among subgrids fully inside the
  // grid (nearest node, clamped one cell inward at the edges).
  std::array<int, 2> nearest_subgrid_centre(const Vec& u) const;
  Vec fd_div_at(const std::array<int, 2>& centre) const;
  Vec fd_div_div_at(const std::array<int, 2>& centre) const;

 private:
  std::array<int, 2> strict_centre(const Vec& u) const;

  Grid grid_;
  std::vector<double> samples_;  // node-major, p values per node
  int p_;
};

// CovariateField adapter over a GridCovariate: value from the nearest node,
// derivatives from the nearest fully-interior 3x3 stencil.
CovariatePtr local_covariate(std::shared_ptr<const GridCovariate> g);

// p = 0 field (intensity depends on beta only); used for degenerate fits.
CovariatePtr empty_covariate(int d);

}  // namespace ppve

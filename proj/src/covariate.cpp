#include "ppve/covariate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ppve/errors.hpp"

namespace ppve {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// Model 1: z(u) = u1^2 u2^2, p = 1.
class Model1 : public CovariateField {
 public:
  Model1() : CovariateField(2, 1) {}
  void value(const Vec& u, Vec& out) const override {
    out.resize(1);
    out[0] = u[0] * u[0] * u[1] * u[1];
  }
  void div(const Vec& u, Vec& out) const override {
    out.resize(1);
    out[0] = 2 * u[0] * u[1] * u[1] + 2 * u[0] * u[0] * u[1];
  }
  void div_div(const Vec& u, Vec& out) const override {
    out.resize(1);
    out[0] = 2 * u[1] * u[1] + 8 * u[0] * u[1] + 2 * u[0] * u[0];
  }
};

// Model 2: z(u) = (sin(4 pi u1), sin(4 pi u2)), p = 2.
class Model2 : public CovariateField {
 public:
  Model2() : CovariateField(2, 2) {}
  void value(const Vec& u, Vec& out) const override {
    out.resize(2);
    out[0] = std::sin(kFourPi * u[0]);
    out[1] = std::sin(kFourPi * u[1]);
  }
  void div(const Vec& u, Vec& out) const override {
    out.resize(2);
    out[0] = kFourPi * std::cos(kFourPi * u[0]);
    out[1] = kFourPi * std::cos(kFourPi * u[1]);
  }
  void div_div(const Vec& u, Vec& out) const override {
    out.resize(2);
    out[0] = -kFourPi * kFourPi * std::sin(kFourPi * u[0]);
    out[1] = -kFourPi * kFourPi * std::sin(kFourPi * u[1]);
  }
  void div_and_div_div(const Vec& u, Vec& dz, Vec& ddz) const override {
    dz.resize(2);
    ddz.resize(2);
    for (int i = 0; i < 2; ++i) {
      const double a = kFourPi * u[i];
      const double s = std::sin(a);
      const double c = std::cos(a);
      dz[i] = kFourPi * c;
      ddz[i] = -kFourPi * kFourPi * s;
    }
  }
};

// Model 3: z(u) = sin(4 pi u1 u2), p = 1.
class Model3 : public CovariateField {
 public:
  Model3() : CovariateField(2, 1) {}
  void value(const Vec& u, Vec& out) const override {
    out.resize(1);
    out[0] = std::sin(kFourPi * u[0] * u[1]);
  }
  void div(const Vec& u, Vec& out) const override {
    out.resize(1);
    out[0] = kFourPi * (u[0] + u[1]) * std::cos(kFourPi * u[0] * u[1]);
  }
  void div_div(const Vec& u, Vec& out) const override {
    // d11 + 2 d12 + d22 with d12 containing the cos cross term.
    out.resize(1);
    const double a = kFourPi * u[0] * u[1];
    const double s = std::sin(a);
    const double c = std::cos(a);
    const double sum = u[0] + u[1];
    out[0] = -kFourPi * kFourPi * sum * sum * s + 2 * kFourPi * c;
  }
  void div_and_div_div(const Vec& u, Vec& dz, Vec& ddz) const override {
    dz.resize(1);
    ddz.resize(1);
    const double a = kFourPi * u[0] * u[1];
    const double s = std::sin(a);
    const double c = std::cos(a);
    const double sum = u[0] + u[1];
    dz[0] = kFourPi * sum * c;
    ddz[0] = -kFourPi * kFourPi * sum * sum * s + 2 * kFourPi * c;
  }
};

// Model 4: z(u) = (u1, u1^2, u1^3), p = 3.
class Model4 : public CovariateField {
 public:
  Model4() : CovariateField(2, 3) {}
  void value(const Vec& u, Vec& out) const override {
    out.resize(3);
    out[0] = u[0];
    out[1] = u[0] * u[0];
    out[2] = u[0] * u[0] * u[0];
  }
  void div(const Vec& u, Vec& out) const override {
    out.resize(3);
    out[0] = 1.0;
    out[1] = 2 * u[0];
    out[2] = 3 * u[0] * u[0];
  }
  void div_div(const Vec& u, Vec& out) const override {
    out.resize(3);
    out[0] = 0.0;
    out[1] = 2.0;
    out[2] = 6 * u[0];
  }
};

// Sine model, p = d: z_i(u) = sin(4 pi u_i)/d.
class SineModel : public CovariateField {
 public:
  explicit SineModel(int d) : CovariateField(d, d) {}
  void value(const Vec& u, Vec& out) const override {
    const int d = dim();
    out.resize(d);
    for (int i = 0; i < d; ++i) out[i] = std::sin(kFourPi * u[i]) / d;
  }
  void div(const Vec& u, Vec& out) const override {
    const int d = dim();
    out.resize(d);
    for (int i = 0; i < d; ++i) out[i] = kFourPi * std::cos(kFourPi * u[i]) / d;
  }
  void div_div(const Vec& u, Vec& out) const override {
    const int d = dim();
    out.resize(d);
    for (int i = 0; i < d; ++i) {
      out[i] = -kFourPi * kFourPi * std::sin(kFourPi * u[i]) / d;
    }
  }
  void div_and_div_div(const Vec& u, Vec& dz, Vec& ddz) const override {
    const int d = dim();
    dz.resize(d);
    ddz.resize(d);
    for (int i = 0; i < d; ++i) {
      const double a = kFourPi * u[i];
      const double s = std::sin(a);
      const double c = std::cos(a);
      dz[i] = kFourPi * c / d;
      ddz[i] = -kFourPi * kFourPi * s / d;
    }
  }
};

class EmptyField : public CovariateField {
 public:
  explicit EmptyField(int d) : CovariateField(d, 0) {}
  void value(const Vec&, Vec& out) const override { out.resize(0); }
  void div(const Vec&, Vec& out) const override { out.resize(0); }
  void div_div(const Vec&, Vec& out) const override { out.resize(0); }
};

}  // namespace

CovariatePtr builtin_covariate(const std::string& model, int d) {
  if (model == "1") return std::make_shared<Model1>();
  if (model == "2") return std::make_shared<Model2>();
  if (model == "3") return std::make_shared<Model3>();
  if (model == "4") return std::make_shared<Model4>();
  if (model == "sine") {
    if (d < 1 || d > kMaxDim) throw UnknownModel("sine model: dimension out of range");
    return std::make_shared<SineModel>(d);
  }
  throw UnknownModel("unknown covariate model '" + model + "'");
}

Vec builtin_theta(const std::string& model, int d) {
  if (model == "1") return Vec::Constant(1, -2.0);
  if (model == "2") {
    Vec t(2);
    t << 1.0, 4.0;
    return t;
  }
  if (model == "3") return Vec::Constant(1, 2.0);
  if (model == "4") {
    Vec t(3);
    t << -1.0, -1.0, -0.5;
    return t;
  }
  if (model == "sine") return Vec::Ones(d);
  throw UnknownModel("unknown covariate model '" + model + "'");
}

int builtin_p(const std::string& model, int d) {
  if (model == "1" || model == "3") return 1;
  if (model == "2") return 2;
  if (model == "4") return 3;
  if (model == "sine") return d;
  throw UnknownModel("unknown covariate model '" + model + "'");
}

GridCovariate::GridCovariate(Grid grid, std::vector<double> samples, int p)
    : grid_(std::move(grid)), samples_(std::move(samples)), p_(p) {
  if (grid_.dim() != 2) {
    throw std::invalid_argument("GridCovariate: planar grids only");
  }
  if (p_ < 1) throw std::invalid_argument("GridCovariate: p must be positive");
  if (samples_.size() != static_cast<std::size_t>(grid_.node_count()) * p_) {
    throw std::invalid_argument("GridCovariate: sample count mismatch");
  }
}

GridCovariate GridCovariate::sample_field(const CovariateField& f, const Grid& grid) {
  const int p = f.p();
  std::vector<double> samples(static_cast<std::size_t>(grid.node_count()) * p);
  Vec v(p);
  for (std::int64_t i = 0; i < grid.node_count(); ++i) {
    f.value(grid.node(i), v);
    for (int k = 0; k < p; ++k) samples[static_cast<std::size_t>(i) * p + k] = v[k];
  }
  return GridCovariate(grid, std::move(samples), p);
}

Vec GridCovariate::value_at(int i0, int i1) const {
  const std::int64_t flat = static_cast<std::int64_t>(i0) * grid_.counts()[1] + i1;
  Vec v(p_);
  for (int k = 0; k < p_; ++k) v[k] = samples_[static_cast<std::size_t>(flat) * p_ + k];
  return v;
}

std::array<int, 2> GridCovariate::strict_centre(const Vec& u) const {
  const int i0 = grid_.axis_cell(0, u[0]);
  const int i1 = grid_.axis_cell(1, u[1]);
  if (i0 < 1 || i0 > grid_.counts()[0] - 2 || i1 < 1 || i1 > grid_.counts()[1] - 2) {
    throw OutOfStencil("GridCovariate: point within one cell of the window edge");
  }
  return {i0, i1};
}

std::array<int, 2> GridCovariate::nearest_subgrid_centre(const Vec& u) const {
  const int i0 = std::clamp(grid_.axis_cell(0, u[0]), 1, grid_.counts()[0] - 2);
  const int i1 = std::clamp(grid_.axis_cell(1, u[1]), 1, grid_.counts()[1] - 2);
  return {i0, i1};
}

Vec GridCovariate::fd_div(const Vec& u) const { return fd_div_at(strict_centre(u)); }

Vec GridCovariate::fd_div_div(const Vec& u) const { return fd_div_div_at(strict_centre(u)); }

Vec GridCovariate::fd_div_at(const std::array<int, 2>& c) const {
  const double h0 = grid_.spacing()[0];
  const double h1 = grid_.spacing()[1];
  Vec out = (value_at(c[0] + 1, c[1]) - value_at(c[0] - 1, c[1])) / (2 * h0);
  out += (value_at(c[0], c[1] + 1) - value_at(c[0], c[1] - 1)) / (2 * h1);
  return out;
}

Vec GridCovariate::fd_div_div_at(const std::array<int, 2>& c) const {
  const double h0 = grid_.spacing()[0];
  const double h1 = grid_.spacing()[1];
  const Vec mid = value_at(c[0], c[1]);
  // d11 + d22 by centred second differences, 2*d12 by the four-corner rule.
  Vec out = (value_at(c[0] + 1, c[1]) - 2 * mid + value_at(c[0] - 1, c[1])) / (h0 * h0);
  out += (value_at(c[0], c[1] + 1) - 2 * mid + value_at(c[0], c[1] - 1)) / (h1 * h1);
  out += (value_at(c[0] + 1, c[1] + 1) - value_at(c[0] + 1, c[1] - 1) -
          value_at(c[0] - 1, c[1] + 1) + value_at(c[0] - 1, c[1] - 1)) /
         (2 * h0 * h1);
  return out;
}

namespace {

class LocalCovariate : public CovariateField {
 public:
  explicit LocalCovariate(std::shared_ptr<const GridCovariate> g)
      : CovariateField(2, g->p()), g_(std::move(g)) {}
  void value(const Vec& u, Vec& out) const override {
    const auto& grid = g_->grid();
    out = g_->value_at(grid.axis_cell(0, u[0]), grid.axis_cell(1, u[1]));
  }
  void div(const Vec& u, Vec& out) const override {
    out = g_->fd_div_at(g_->nearest_subgrid_centre(u));
  }
  void div_div(const Vec& u, Vec& out) const override {
    out = g_->fd_div_div_at(g_->nearest_subgrid_centre(u));
  }
  void div_and_div_div(const Vec& u, Vec& dz, Vec& ddz) const override {
    const auto c = g_->nearest_subgrid_centre(u);
    dz = g_->fd_div_at(c);
    ddz = g_->fd_div_div_at(c);
  }

 private:
  std::shared_ptr<const GridCovariate> g_;
};

}  // namespace

CovariatePtr local_covariate(std::shared_ptr<const GridCovariate> g) {
  return std::make_shared<LocalCovariate>(std::move(g));
}

CovariatePtr empty_covariate(int d) { return std::make_shared<EmptyField>(d); }

}  // namespace ppve

#pragma once

// Data-parallel sampling kernels. Each has a serial reference path and an
// OpenMP path selected by Execution; both fill results by index.

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "bubbleton/dressing.hpp"
#include "bubbleton/execution.hpp"
#include "bubbleton/geometry.hpp"

namespace bubbleton {

/// Pipeline immersion at each z.
std::vector<Vec3> sample_immersion(const BubbletonParams& params, std::span<const cplx> zs,
                                   Execution exec = Execution::parallel);

/// Sym-Bobenko matrices at each z, for planarity checks.
std::vector<Mat2<cplx>> sample_immersion_matrices(const BubbletonParams& params, std::span<const cplx> zs,
                                                  Execution exec = Execution::parallel);

struct SurfaceMesh {
  int nx = 0;
  int ny = 0;
  std::pair<double, double> x_range{0.0, 1.0};
  std::pair<double, double> y_range{-3.0, 3.0};
  std::vector<Vec3> points;  // row-major: index j * nx + i for x_i, y_j

  const Vec3& at(int i, int j) const { return points[std::size_t(j) * nx + i]; }
  double dx() const { return (x_range.second - x_range.first) / (nx - 1); }
  double dy() const { return (y_range.second - y_range.first) / (ny - 1); }
};

SurfaceMesh surface_mesh(const BubbletonParams& params, int nx, int ny,
                         std::pair<double, double> y_range = {-3.0, 3.0},
                         Execution exec = Execution::parallel,
                         std::pair<double, double> x_range = {0.0, 1.0});

struct MeanCurvatureField {
  int nx = 0;
  int ny = 0;
  int margin = 2;
  std::vector<double> values;  // NaN outside the interior and where the metric degenerates
  std::size_t degenerate = 0;

  double at(int i, int j) const { return values[std::size_t(j) * nx + i]; }
  bool interior(int i, int j) const { return i >= margin && j >= margin && i < nx - margin && j < ny - margin; }
  /// max |H_est - h| over interior, non-degenerate points.
  double max_deviation(double h) const;
};

enum class StencilOrder { second, fourth };

/// Central differences (3- or 5-point) for the fundamental forms, normal
/// x_x cross x_y. Interior means a full 5x5 neighbourhood.
MeanCurvatureField mean_curvature_estimate(const SurfaceMesh& mesh, Execution exec = Execution::parallel,
                                           StencilOrder order = StencilOrder::fourth);

}  // namespace bubbleton

#include "bubbleton/kernels.hpp"

#include <cmath>

#include "bubbleton/detail/parallel.hpp"

namespace bubbleton {

std::vector<Mat2<cplx>> sample_immersion_matrices(const BubbletonParams& params, std::span<const cplx> zs,
                                                  Execution exec) {
  std::vector<Mat2<cplx>> out(zs.size());
  detail::for_each_index(zs.size(), exec, [&](std::size_t i) { out[i] = immersion_matrix(zs[i], params); });
  return out;
}

std::vector<Vec3> sample_immersion(const BubbletonParams& params, std::span<const cplx> zs, Execution exec) {
  std::vector<Vec3> out(zs.size());
  detail::for_each_index(zs.size(), exec, [&](std::size_t i) { out[i] = immersion(zs[i], params); });
  return out;
}

SurfaceMesh surface_mesh(const BubbletonParams& params, int nx, int ny, std::pair<double, double> y_range,
                         Execution exec, std::pair<double, double> x_range) {
  if (nx < 2 || ny < 2) throw Error(Errc::invalid_argument, "mesh needs nx, ny >= 2");
  SurfaceMesh mesh;
  mesh.nx = nx;
  mesh.ny = ny;
  mesh.x_range = x_range;
  mesh.y_range = y_range;
  std::vector<cplx> zs(std::size_t(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      // Endpoints are hit exactly so the seam columns are sampled at x = 0 and x = 1.
      const double x = i == nx - 1 ? x_range.second : x_range.first + i * mesh.dx();
      const double y = j == ny - 1 ? y_range.second : y_range.first + j * mesh.dy();
      zs[std::size_t(j) * nx + i] = cplx(x, y);
    }
  }
  mesh.points = sample_immersion(params, zs, exec);
  return mesh;
}

double MeanCurvatureField::max_deviation(double h) const {
  double worst = 0.0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      if (interior(i, j) && std::isfinite(at(i, j))) worst = std::max(worst, std::abs(at(i, j) - h));
  return worst;
}

namespace {

// Central differences along one grid axis: offsets are (di, dj) steps.
Vec3 first_difference(const SurfaceMesh& m, int i, int j, int di, int dj, double h, StencilOrder order) {
  const Vec3 p1 = m.at(i + di, j + dj) - m.at(i - di, j - dj);
  if (order == StencilOrder::second) return (0.5 / h) * p1;
  const Vec3 p2 = m.at(i + 2 * di, j + 2 * dj) - m.at(i - 2 * di, j - 2 * dj);
  return (1.0 / (12.0 * h)) * (8.0 * p1 - p2);
}

Vec3 second_difference(const SurfaceMesh& m, int i, int j, int di, int dj, double h, StencilOrder order) {
  const Vec3& c = m.at(i, j);
  const Vec3 s1 = m.at(i + di, j + dj) + m.at(i - di, j - dj);
  if (order == StencilOrder::second) return (1.0 / (h * h)) * (s1 - 2.0 * c);
  const Vec3 s2 = m.at(i + 2 * di, j + 2 * dj) + m.at(i - 2 * di, j - 2 * dj);
  return (1.0 / (12.0 * h * h)) * (16.0 * s1 - s2 - 30.0 * c);
}

Vec3 derivative_x(const SurfaceMesh& m, int i, int j, double h, StencilOrder o) { return first_difference(m, i, j, 1, 0, h, o); }
Vec3 derivative_y(const SurfaceMesh& m, int i, int j, double h, StencilOrder o) { return first_difference(m, i, j, 0, 1, h, o); }
Vec3 second_x(const SurfaceMesh& m, int i, int j, double h, StencilOrder o) { return second_difference(m, i, j, 1, 0, h, o); }
Vec3 second_y(const SurfaceMesh& m, int i, int j, double h, StencilOrder o) { return second_difference(m, i, j, 0, 1, h, o); }

// Tensor product of the first-difference weights in x and y.
Vec3 mixed(const SurfaceMesh& m, int i, int j, double dx, double dy, StencilOrder order) {
  static constexpr int kOffsets[4] = {-2, -1, 1, 2};
  static constexpr double kSecond[4] = {0.0, -0.5, 0.5, 0.0};
  static constexpr double kFourth[4] = {1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0};
  const double* w = order == StencilOrder::second ? kSecond : kFourth;
  Vec3 acc;
  for (int a = 0; a < 4; ++a) {
    if (w[a] == 0.0) continue;
    for (int b = 0; b < 4; ++b) {
      if (w[b] == 0.0) continue;
      acc = acc + (w[a] * w[b]) * m.at(i + kOffsets[a], j + kOffsets[b]);
    }
  }
  return (1.0 / (dx * dy)) * acc;
}

}  // namespace

MeanCurvatureField mean_curvature_estimate(const SurfaceMesh& mesh, Execution exec, StencilOrder order) {
  MeanCurvatureField field;
  field.nx = mesh.nx;
  field.ny = mesh.ny;
  field.values.assign(mesh.points.size(), std::numeric_limits<double>::quiet_NaN());
  const double dx = mesh.dx();
  const double dy = mesh.dy();
  std::vector<char> degenerate(mesh.points.size(), 0);

  detail::for_each_index(std::size_t(mesh.ny), exec, [&](std::size_t row) {
    const int j = static_cast<int>(row);
    for (int i = 0; i < mesh.nx; ++i) {
      if (!field.interior(i, j)) continue;
      const Vec3 fx = derivative_x(mesh, i, j, dx, order);
      const Vec3 fy = derivative_y(mesh, i, j, dy, order);
      const Vec3 fxx = second_x(mesh, i, j, dx, order);
      const Vec3 fyy = second_y(mesh, i, j, dy, order);
      const Vec3 fxy = mixed(mesh, i, j, dx, dy, order);
      const double e_ = dot(fx, fx);
      const double f_ = dot(fx, fy);
      const double g_ = dot(fy, fy);
      const double metric = e_ * g_ - f_ * f_;
      const Vec3 normal = cross(fx, fy);
      const double nn = norm(normal);
      const std::size_t idx = std::size_t(j) * mesh.nx + i;
      if (!(metric > 1e-14 * e_ * g_) || !(nn > 0.0)) {
        degenerate[idx] = 1;
        continue;
      }
      const Vec3 n = (1.0 / nn) * normal;
      const double l = dot(fxx, n);
      const double m = dot(fxy, n);
      const double q = dot(fyy, n);
      field.values[idx] = (l * g_ - 2.0 * m * f_ + q * e_) / (2.0 * metric);
    }
  });
  for (char d : degenerate) field.degenerate += d;
  return field;
}

}  // namespace bubbleton

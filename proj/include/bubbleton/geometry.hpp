#pragma once

// Sym-Bobenko immersion, the closed forms along y = 0, and analysis of the
// planar curve (turning number, self-intersections).

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "bubbleton/algebra.hpp"
#include "bubbleton/dressing.hpp"
#include "bubbleton/execution.hpp"

namespace bubbleton {

/// The printed y = 0 summands carry the prefactor i, which is -2 i lambda / H at
/// lambda = 1 for this H. Pipeline curves compared with them use this value.
inline constexpr double kPrintedCurveH = -2.0;

/// f = -2 i lambda0 H^{-1} F' F^{-1}, from a frame carried as a jet at lambda0.
Mat2<cplx> sym_bobenko(const Mat2<Jet>& frame_jet, cplx lambda0, double h, double tol = kStructuralTol);

Mat2<cplx> immersion_matrix(cplx z, const BubbletonParams& params, Sheet sheet = Sheet::principal);
Vec3 immersion(cplx z, const BubbletonParams& params, Sheet sheet = Sheet::principal);

/// The round cylinder at lambda = 1 as the su2 matrix
/// H^{-1} [[i sin^2(pi x), -cos(pi x) sin(pi x) - i pi y], [cos(pi x) sin(pi x) - i pi y, -i sin^2(pi x)]].
Mat2<cplx> cylinder_immersion_matrix(double x, double y, double h);

/// (-sin 2 pi x, -2 pi y, 1 - cos 2 pi x) / (2H), the vector form of the matrix above.
Vec3 cylinder_immersion_closed_form(double x, double y, double h);

// ---------------------------------------------------------------------------
// y = 0 closed forms
// ---------------------------------------------------------------------------

struct CurveSummands {
  Mat2<cplx> t1;  // i h' h^{-1}, constant
  Mat2<cplx> t2;  // i h F' F^{-1} h^{-1}
  Mat2<cplx> t3;  // i h F h~^{-1}' h~ F^{-1} h^{-1} = [[i u, -v], [v, -i u]]

  Mat2<cplx> sum() const { return t1 + t2 + t3; }
};

CurveSummands curve_summands(double x, int k);

namespace detail {

/// The printed u and v of the third summand.
template <class T>
std::array<T, 2> third_summand_uv(const T& x, int k, double alpha) {
  using std::cos;
  using std::sin;
  const double sa = std::sqrt(alpha);
  const double am = (sa - 1.0) * (sa - 1.0);
  const double ap = (sa + 1.0) * (sa + 1.0);
  const T two_pi_x = T(2.0 * kPi) * x;
  const T kx = T(double(k)) * two_pi_x;
  const T denom = T(2.0 * (alpha - 1.0)) *
                  (T(-(alpha - 1.0) * (alpha - 1.0)) * cos(T(2.0) * kx) + T(alpha * alpha + 6.0 * alpha + 1.0));
  const T envelope = T(alpha - 1.0) * cos(kx) - T(alpha + 1.0);
  const T cos_part = T(am) * cos(T(double(k + 1)) * two_pi_x) + T(ap) * cos(T(double(k - 1)) * two_pi_x) +
                     T(2.0 * (alpha - 1.0)) * cos(two_pi_x);
  const T sin_part = T(am) * sin(T(double(k + 1)) * two_pi_x) - T(ap) * sin(T(double(k - 1)) * two_pi_x) +
                     T(2.0 * (alpha - 1.0)) * sin(two_pi_x);
  const T u = T(alpha + 1.0) * envelope * cos_part / denom;
  const T v = T(alpha + 1.0) * sin_part * envelope / denom;
  return {u, v};
}

/// X(x) = sin(2 pi x)/4 + v and Z(x) = u - sin^2(pi x)/2 - K/(2 sqrt(K^2-1)).
template <class T>
std::array<T, 2> printed_curve(const T& x, int k, double alpha) {
  using std::cos;
  using std::sin;
  const auto [u, v] = third_summand_uv(x, k, alpha);
  const T s = sin(T(kPi) * x);
  const T big_x = sin(T(2.0 * kPi) * x) / T(4.0) + v;
  const T big_z = u - s * s / T(2.0) - T(double(k) / (2.0 * std::sqrt(double(k) * k - 1.0)));
  return {big_x, big_z};
}

}  // namespace detail

struct Point2 {
  double x = 0.0;  // X
  double y = 0.0;  // Z

  friend Point2 operator+(Point2 p, Point2 q) { return {p.x + q.x, p.y + q.y}; }
  friend Point2 operator-(Point2 p, Point2 q) { return {p.x - q.x, p.y - q.y}; }
  friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
};

inline double cross(Point2 p, Point2 q) { return p.x * q.y - p.y * q.x; }
inline double dot(Point2 p, Point2 q) { return p.x * q.x + p.y * q.y; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }

/// The printed planar curve x -> (X(x), Z(x)) of the K-lobed bubbleton.
Point2 bubbleton_curve_closed_form(double x, int k);

/// (X, Z) = (-x1, x3) for a point of the y = 0 plane x2 = 0.
inline Point2 plane_coordinates(const Vec3& p) { return {-p.x1, p.x3}; }

// ---------------------------------------------------------------------------
// Planar curves
// ---------------------------------------------------------------------------

struct PlanarCurve {
  std::vector<double> params;  // increasing, in [0, 1]
  std::vector<Point2> points;
  bool closed = false;  // if so, the last sample repeats the first
  std::function<Point2(double)> evaluator;  // optional, pure
};

/// Samples f at n + 1 uniform parameters x = i/n.
PlanarCurve sample_curve(std::function<Point2(double)> evaluator, int n, bool closed, Execution exec = Execution::parallel);

struct CurveOptions {
  int samples = 2048;
  bool refine = true;
  double max_turn = 0.1;  // radians between consecutive segments
  int max_passes = 24;
  double planarity_tol = 1e-9;
  Execution exec = Execution::parallel;
};

/// The y = 0 curve of a single bubbleton (or the cylinder) from the full pipeline.
/// Throws planarity_violated if x2 or the imaginary part of the off-diagonal
/// entry leaves the plane.
PlanarCurve extract_planar_curve(const BubbletonParams& params, const CurveOptions& options = {});

/// Bisects intervals adjacent to vertices where the polyline turns by more than
/// max_turn, until none remain or max_passes is reached. Needs an evaluator.
void refine_curve(PlanarCurve& curve, double max_turn = 0.1, int max_passes = 24, Execution exec = Execution::parallel);

struct TurningNumber {
  int value = 0;
  double raw = 0.0;       // total signed tangent rotation / 2 pi
  double residual = 0.0;  // |raw - value|
  double max_turn = 0.0;  // largest exterior angle seen
  std::size_t samples = 0;
};

/// Winding of the unit tangent by unwrapped exterior angles of the closed
/// polyline (refined first when an evaluator is present).
TurningNumber turning_number(const PlanarCurve& curve);

/// (1/2pi) int_0^1 (X'Z'' - X''Z') / (X'^2 + Z'^2) dx for the printed curve,
/// by adaptive Simpson with exact derivatives.
double printed_turning_integral(int k, double tol = 1e-8);

struct Intersection {
  double s = 0.0;  // curve parameter on the first branch
  double t = 0.0;  // curve parameter on the second branch, s < t
  Point2 point;
};

/// Transversal crossings between non-adjacent segments, found with a uniform
/// hash grid and refined by bisection on the evaluator when present.
std::vector<Intersection> self_intersections(const PlanarCurve& curve, double param_tol = 1e-9);

}  // namespace bubbleton

#include "bubbleton/geometry.hpp"

#include <algorithm>
#include <string>

#include "bubbleton/detail/parallel.hpp"
#include "bubbleton/kernels.hpp"

namespace bubbleton {

Mat2<cplx> sym_bobenko(const Mat2<Jet>& frame_jet, cplx lambda0, double h, double tol) {
  if (h == 0.0) throw Error(Errc::invalid_argument, "mean curvature must be nonzero");
  const cplx coefficient = -2.0 * kI * lambda0 / h;
  const Mat2<cplx> f = coefficient * (derivative_part(frame_jet) * value_part(frame_jet).inverse());
  spinor_to_r3(f, tol);  // throws not_in_su2
  return f;
}

Mat2<cplx> immersion_matrix(cplx z, const BubbletonParams& params, Sheet sheet) {
  const Jet lambda = Jet::variable(params.lambda0);
  const Mat2<Jet> f = params.lobes.empty() ? frame(z, lambda, sheet) : dressed_frame(z, lambda, params, sheet);
  return sym_bobenko(f, params.lambda0, params.h);
}

Vec3 immersion(cplx z, const BubbletonParams& params, Sheet sheet) {
  return spinor_to_r3(immersion_matrix(z, params, sheet));
}

Mat2<cplx> cylinder_immersion_matrix(double x, double y, double h) {
  const double s = std::sin(kPi * x);
  const double c = std::cos(kPi * x);
  const Mat2<cplx> m{cplx(0.0, s * s), cplx(-c * s, -kPi * y), cplx(c * s, -kPi * y), cplx(0.0, -s * s)};
  return (1.0 / h) * m;
}

Vec3 cylinder_immersion_closed_form(double x, double y, double h) {
  const double k = 1.0 / (2.0 * h);
  return {-k * std::sin(2.0 * kPi * x), -k * 2.0 * kPi * y, k * (1.0 - std::cos(2.0 * kPi * x))};
}

CurveSummands curve_summands(double x, int k) {
  const double alpha = alpha_for_lobes(k);
  const double c1 = k / (2.0 * std::sqrt(double(k) * k - 1.0));
  const double s = std::sin(kPi * x);
  const double s2 = std::sin(2.0 * kPi * x);
  const auto [u, v] = detail::third_summand_uv(x, k, alpha);
  CurveSummands out;
  out.t1 = Mat2<cplx>::diag(cplx(0.0, -c1), cplx(0.0, c1));
  out.t2 = {cplx(0.0, -0.5 * s * s), cplx(-0.25 * s2), cplx(0.25 * s2), cplx(0.0, 0.5 * s * s)};
  out.t3 = {cplx(0.0, u), cplx(-v), cplx(v), cplx(0.0, -u)};
  return out;
}

Point2 bubbleton_curve_closed_form(double x, int k) {
  const auto [big_x, big_z] = detail::printed_curve(x, k, alpha_for_lobes(k));
  return {big_x, big_z};
}

PlanarCurve sample_curve(std::function<Point2(double)> evaluator, int n, bool closed, Execution exec) {
  if (n < 1) throw Error(Errc::invalid_argument, "sample count must be positive");
  PlanarCurve curve;
  curve.closed = closed;
  curve.params.resize(std::size_t(n) + 1);
  curve.points.resize(std::size_t(n) + 1);
  for (int i = 0; i <= n; ++i) curve.params[i] = double(i) / n;
  detail::for_each_index(curve.params.size(), exec,
                         [&](std::size_t i) { curve.points[i] = evaluator(curve.params[i]); });
  curve.evaluator = std::move(evaluator);
  return curve;
}

PlanarCurve extract_planar_curve(const BubbletonParams& params, const CurveOptions& options) {
  if (params.lobes.size() > 1) throw Error(Errc::invalid_argument, "the planar y = 0 curve is defined for single bubbletons");
  if (options.samples < 16) throw Error(Errc::invalid_argument, "need at least 16 curve samples");

  const int n = options.samples;
  std::vector<cplx> zs(std::size_t(n) + 1);
  for (int i = 0; i <= n; ++i) zs[i] = double(i) / n;
  const std::vector<Mat2<cplx>> ms = sample_immersion_matrices(params, zs, options.exec);

  PlanarCurve curve;
  curve.closed = true;
  curve.params.resize(zs.size());
  curve.points.resize(zs.size());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Mat2<cplx>& m = ms[i];
    const double limit = options.planarity_tol * std::max(1.0, norm(m));
    if (std::abs(m.b.imag()) > limit || std::abs(m.c.imag()) > limit) {
      throw Error(Errc::planarity_violated, "off-diagonal imaginary part " + std::to_string(m.b.imag()) +
                                                " at x = " + std::to_string(zs[i].real()));
    }
    curve.params[i] = zs[i].real();
    curve.points[i] = plane_coordinates(spinor_to_r3(m));
  }
  curve.evaluator = [params](double x) { return plane_coordinates(immersion(cplx(x), params)); };
  if (options.refine) refine_curve(curve, options.max_turn, options.max_passes, options.exec);
  return curve;
}

}  // namespace bubbleton

#include "bubbleton/algebra.hpp"

#include <string>

namespace bubbleton {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_in_su2: return "NotInSu2";
    case Errc::singular_input: return "SingularInput";
    case Errc::zero_argument: return "ZeroArgument";
    case Errc::zero_lambda: return "ZeroLambda";
    case Errc::invalid_lobe_number: return "InvalidLobeNumber";
    case Errc::duplicate_lobe: return "DuplicateLobe";
    case Errc::pole_at_lambda: return "PoleAtLambda";
    case Errc::unimodular_alpha: return "UnimodularAlpha";
    case Errc::extrapolation_diverged: return "ExtrapolationDiverged";
    case Errc::planarity_violated: return "PlanarityViolated";
    case Errc::irregular_curve: return "IrregularCurve";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_failure: return "IoFailure";
  }
  return "Unknown";
}

Vec3 spinor_to_r3(const Mat2<cplx>& m, double tol) {
  const double scale = std::max(1.0, norm(m));
  const double skew = norm(m + conj_transpose(m));
  const double tr = std::abs(m.trace());
  if (skew > tol * scale || tr > tol * scale) {
    throw Error(Errc::not_in_su2, "anti-hermitian defect " + std::to_string(skew) + ", trace " + std::to_string(tr));
  }
  return {0.5 * (m.b.real() - m.c.real()), 0.5 * (m.b.imag() + m.c.imag()), 0.5 * (m.a.imag() - m.d.imag())};
}

QR gram_schmidt_qr(const Mat2<cplx>& m, double tol) {
  if (std::abs(m.det()) <= tol) throw Error(Errc::singular_input, "gram_schmidt_qr of a singular matrix");
  const double r11 = std::hypot(std::abs(m.a), std::abs(m.c));
  const cplx q1a = m.a / r11;
  const cplx q1c = m.c / r11;
  const cplx r12 = std::conj(q1a) * m.b + std::conj(q1c) * m.d;
  const cplx wb = m.b - r12 * q1a;
  const cplx wd = m.d - r12 * q1c;
  const double r22 = std::hypot(std::abs(wb), std::abs(wd));
  return {{q1a, wb / r22, q1c, wd / r22}, {cplx(r11), r12, cplx(0.0), cplx(r22)}};
}

}  // namespace bubbleton

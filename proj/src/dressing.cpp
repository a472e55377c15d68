#include "bubbleton/dressing.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace bubbleton {

double alpha_for_lobes(int k) {
  if (k < 2) throw Error(Errc::invalid_lobe_number, "K must be >= 2, got " + std::to_string(k));
  const double kd = k;
  return 1.0 / (2.0 * kd * kd - 1.0 + 2.0 * kd * std::sqrt(kd * kd - 1.0));
}

SimpleFactorParams SimpleFactorParams::for_lobes(int k) {
  return {k, alpha_for_lobes(k), LineCP1::e1()};
}

BubbletonParams BubbletonParams::cylinder(double h) {
  if (h == 0.0) throw Error(Errc::invalid_argument, "mean curvature must be nonzero");
  BubbletonParams p;
  p.h = h;
  return p;
}

BubbletonParams BubbletonParams::single(int k, double h) { return multi({k}, h); }

BubbletonParams BubbletonParams::multi(std::vector<int> ks, double h) {
  BubbletonParams p = cylinder(h);
  std::sort(ks.begin(), ks.end());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i > 0 && ks[i] == ks[i - 1])
      throw Error(Errc::duplicate_lobe, "lobe number " + std::to_string(ks[i]) + " appears more than once");
    p.lobes.push_back(SimpleFactorParams::for_lobes(ks[i]));
  }
  return p;
}

Mat2<cplx> normalizing_unitary(const LineCP1& line, double alpha) {
  const Mat2<cplx> p0 = psi(line, cplx(alpha), cplx(0.0));
  const cplx scale = 1.0 / principal_sqrt(p0.det());
  return gram_schmidt_qr(scale * p0).q;
}

namespace {

// exp(-|Im mu|) F_alpha(z), entries bounded by max(1, alpha^{-1/2}).
Mat2<cplx> scaled_frame(cplx z, double alpha) {
  const cplx m = mu(z, cplx(alpha));
  const double shift = std::abs(m.imag());
  const cplx ep = std::exp(kI * m - shift);
  const cplx em = std::exp(-kI * m - shift);
  const cplx c = 0.5 * (ep + em);
  const cplx s = (ep - em) / (2.0 * kI);
  const double r = std::sqrt(alpha);
  return {c, kI * s / r, kI * r * s, c};
}

}  // namespace

LineCP1 dressed_line(cplx z, double alpha, const LineCP1& line) {
  if (std::abs(std::abs(alpha) - 1.0) <= kStructuralTol) throw Error(Errc::unimodular_alpha, "|alpha| = 1");
  return conj_transpose(scaled_frame(z, alpha)) * line;
}

DressingAtPoint::DressingAtPoint(cplx z, const BubbletonParams& params, Sheet sheet) : z_(z), sheet_(sheet) {
  stages_.reserve(params.lobes.size());
  lines_.reserve(params.lobes.size());
  for (std::size_t j = 0; j < params.lobes.size(); ++j) {
    const SimpleFactorParams& lobe = params.lobes[j];
    // The line transforms by the frame dressed with all earlier lobes, taken at
    // this lobe's singularity. A positive rescaling does not change the line.
    const Mat2<cplx> earlier = apply(cplx(lobe.alpha), j, scaled_frame(z, lobe.alpha));
    const LineCP1 dressed = conj_transpose(earlier) * lobe.line;
    stages_.push_back({lobe.alpha, lobe.line, dressed, conj_transpose(normalizing_unitary(lobe.line, lobe.alpha)),
                       normalizing_unitary(dressed, lobe.alpha)});
    lines_.push_back(dressed);
  }
}

namespace {

Mat2<cplx> conjugated_frame_near_alpha(double alpha, double eps) {
  const cplx lambda = alpha + eps;
  const Mat2<cplx> h = simple_factor(LineCP1::e1(), alpha, lambda, 1e-14);
  return h * frame(cplx(1.0), lambda) * h.inverse();
}

}  // namespace

Mat2<cplx> residue_check(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(Errc::invalid_argument, "residue_check needs alpha in (0, 1)");
  // Richardson table on eps_k = 10^{-k} d, k = 2..6, where d = min(alpha, 1 - alpha)
  // keeps the samples well inside the disc of analyticity around alpha; each
  // column removes one more power of eps.
  constexpr int kFirst = 2;
  constexpr int kLast = 6;
  constexpr int kRows = kLast - kFirst + 1;
  const double radius = std::min(alpha, 1.0 - alpha);
  std::array<std::array<Mat2<cplx>, kRows>, kRows> table{};
  for (int r = 0; r < kRows; ++r) {
    table[r][0] = conjugated_frame_near_alpha(alpha, std::pow(10.0, -(kFirst + r)) * radius);
    double factor = 1.0;
    for (int c = 1; c <= r; ++c) {
      factor *= 10.0;
      table[r][c] = (1.0 / (factor - 1.0)) * (factor * table[r][c - 1] - table[r - 1][c - 1]);
    }
  }
  const Mat2<cplx>& best = table[kRows - 1][kRows - 1];
  const Mat2<cplx>& previous = table[kRows - 2][kRows - 2];
  const double change = distance(best, previous);
  const double scale = std::max(1.0, norm(best));
  if (!std::isfinite(change) || change > 1e-7 * scale) {
    throw Error(Errc::extrapolation_diverged,
                "successive estimates differ by " + std::to_string(change / scale) + " (relative)");
  }
  return best;
}

Mat2<cplx> residue_check(int k) { return residue_check(alpha_for_lobes(k)); }

Mat2<cplx> residue_limit_closed_form(int k) {
  const double alpha = alpha_for_lobes(k);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const double coefficient = 2.0 * kPi * k * (double(k) * k - 1.0) / std::sqrt(alpha);
  return {cplx(sign), cplx(0.0, sign * coefficient), cplx(0.0), cplx(sign)};
}

}  // namespace bubbleton

#pragma once

// Simple factors and the dressing action on the cylinder frame.

#include <vector>

#include "bubbleton/algebra.hpp"
#include "bubbleton/cylinder.hpp"

namespace bubbleton {

/// Guard radius around the singularities alpha and 1/alpha.
inline constexpr double kPoleGuard = 1e-6;

/// The admissible singularity for K lobes: the root in (0, 1) of
/// alpha^{-1/2} + alpha^{1/2} = 2K. Evaluated as 1 / (2K^2 - 1 + 2K sqrt(K^2 - 1)),
/// which is the same number without the cancellation of the other form.
double alpha_for_lobes(int k);

struct SimpleFactorParams {
  int k = 2;
  double alpha = 0.0;
  LineCP1 line = LineCP1::e1();

  static SimpleFactorParams for_lobes(int k);
};

struct BubbletonParams {
  std::vector<SimpleFactorParams> lobes;  // sorted by increasing K
  double h = -0.5;                        // mean curvature
  cplx lambda0 = 1.0;                     // Sym point

  static BubbletonParams cylinder(double h = -0.5);
  static BubbletonParams single(int k, double h = -0.5);
  /// Validates K >= 2 and distinctness, and sorts by K.
  static BubbletonParams multi(std::vector<int> ks, double h = -0.5);
};

/// psi_{L,alpha}(lambda) = pi_L + (alpha - lambda)/(1 - conj(alpha) lambda) pi_L^perp
template <class S>
Mat2<S> psi(const LineCP1& line, cplx alpha, const S& lambda, double tol = kStructuralTol) {
  const cplx denom = 1.0 - std::conj(alpha) * value_of(lambda);
  if (std::abs(denom) <= tol) throw Error(Errc::pole_at_lambda, "lambda at 1/conj(alpha)");
  const S ratio = (S(alpha) - lambda) / (S(1.0) - S(std::conj(alpha)) * lambda);
  const Mat2<cplx> p = hermitian_projection(line);
  const Mat2<cplx> q = Mat2<cplx>::identity() - p;
  return {S(p.a) + ratio * S(q.a), S(p.b) + ratio * S(q.b),
          S(p.c) + ratio * S(q.c), S(p.d) + ratio * S(q.d)};
}

/// The constant unitary Q of Gram-Schmidt applied to det^{-1/2} psi_{L,alpha}(0).
Mat2<cplx> normalizing_unitary(const LineCP1& line, double alpha);

/// h_{L,alpha}(lambda) = (det psi)^{-1/2} Q^{-1} psi_{L,alpha}(lambda)
template <class S>
Mat2<S> simple_factor(const LineCP1& line, double alpha, const S& lambda, double tol = kStructuralTol) {
  if (std::abs(std::abs(alpha) - 1.0) <= tol) throw Error(Errc::unimodular_alpha, "|alpha| = 1");
  const cplx lv = value_of(lambda);
  if (std::abs(lv - alpha) <= tol || std::abs(1.0 - alpha * lv) <= tol)
    throw Error(Errc::pole_at_lambda, "lambda at alpha or 1/alpha");
  const Mat2<S> p = psi(line, cplx(alpha), lambda, tol);
  const Mat2<cplx> q_inv = conj_transpose(normalizing_unitary(line, alpha));
  const S scale = S(1.0) / principal_sqrt(p.det());
  Mat2<S> q_inv_s;
  if constexpr (is_jet_v<S>) {
    q_inv_s = lift(q_inv);
  } else {
    q_inv_s = q_inv;
  }
  return scale * (q_inv_s * p);
}

/// conj(F_alpha(z))^t L. Uses exponentially rescaled trigonometric functions
/// so the result stays finite for large |Im z|.
LineCP1 dressed_line(cplx z, double alpha, const LineCP1& line);

/// Per-point data of an iterated dressing: for each lobe, the constant factor
/// Q^{-1}, the transformed line and its Gram-Schmidt unitary.
class DressingAtPoint {
 public:
  DressingAtPoint(cplx z, const BubbletonParams& params, Sheet sheet = Sheet::principal);

  /// The dressed frame at spectral parameter lambda.
  template <class S>
  Mat2<S> frame_at(const S& lambda, double guard = kPoleGuard) const;

  const std::vector<LineCP1>& transformed_lines() const { return lines_; }

 private:
  struct Stage {
    double alpha;
    LineCP1 line;
    LineCP1 dressed;
    Mat2<cplx> q_inv;
    Mat2<cplx> q_dressed;
  };

  template <class S>
  Mat2<S> apply(const S& lambda, std::size_t count, Mat2<S> g) const;

  cplx z_;
  Sheet sheet_;
  std::vector<Stage> stages_;
  std::vector<LineCP1> lines_;
};

// Left-multiplies the stages [0, count) onto g, which must be the cylinder
// frame at (z, lambda) up to a positive scale.
template <class S>
Mat2<S> DressingAtPoint::apply(const S& lambda, std::size_t count, Mat2<S> g) const {
  for (std::size_t j = 0; j < count; ++j) {
    const Stage& st = stages_[j];
    // The scalar factors (det psi)^{-+1/2} of h and h~^{-1} cancel since det psi
    // does not depend on the line.
    const Mat2<S> left = psi(st.line, cplx(st.alpha), lambda);
    const Mat2<S> right = psi(st.dressed, cplx(st.alpha), lambda).inverse();
    if constexpr (is_jet_v<S>) {
      g = lift(st.q_inv) * left * g * right * lift(st.q_dressed);
    } else {
      g = st.q_inv * left * g * right * st.q_dressed;
    }
  }
  return g;
}

template <class S>
Mat2<S> DressingAtPoint::frame_at(const S& lambda, double guard) const {
  const cplx lv = value_of(lambda);
  for (const Stage& st : stages_) {
    if (std::abs(lv - st.alpha) <= guard || std::abs(lv - 1.0 / st.alpha) <= guard)
      throw Error(Errc::pole_at_lambda, "lambda within the guard radius of a singularity");
  }
  return apply(lambda, stages_.size(), frame(z_, lambda, sheet_));
}

/// (h # F)(z, lambda) for all lobes of params, applied in increasing K.
template <class S>
Mat2<S> dressed_frame(cplx z, const S& lambda, const BubbletonParams& params, Sheet sheet = Sheet::principal) {
  return DressingAtPoint(z, params, sheet).frame_at(lambda);
}

/// Richardson-extrapolated lim_{lambda -> alpha} h F_lambda(1) h^{-1} for L = [1:0].
/// Throws extrapolation_diverged when the singularity is not removable.
Mat2<cplx> residue_check(double alpha);
Mat2<cplx> residue_check(int k);

/// The limit in closed form: (-1)^K (1 + i alpha^{-1/2} 2 pi K (K^2 - 1) E12).
Mat2<cplx> residue_limit_closed_form(int k);

}  // namespace bubbleton

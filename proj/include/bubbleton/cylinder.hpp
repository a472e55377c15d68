#pragma once

// Extended frame of the round cylinder, its monodromy with base point 0, and
// the period-closing test.

#include "bubbleton/algebra.hpp"

namespace bubbleton {

/// Which sheet of lambda^{1/2} to use. The frame is even in the sheet, so the
/// choice never changes exported quantities; it exists so tests can check that.
enum class Sheet { principal, negated };

template <class S>
S sqrt_lambda(const S& lambda, Sheet sheet = Sheet::principal) {
  if (value_of(lambda) == cplx(0.0, 0.0)) throw Error(Errc::zero_lambda, "spectral parameter must be nonzero");
  const S s = principal_sqrt(lambda);
  return sheet == Sheet::principal ? s : -s;
}

/// mu_lambda(z) = (pi/2) (z lambda^{-1/2} + conj(z) lambda^{1/2})
template <class S>
S mu(cplx z, const S& lambda, Sheet sheet = Sheet::principal) {
  const S s = sqrt_lambda(lambda, sheet);
  return S(kPi / 2.0) * (S(z) / s + S(std::conj(z)) * s);
}

/// F_lambda(z) = [[cos mu, i lambda^{-1/2} sin mu], [i lambda^{1/2} sin mu, cos mu]]
template <class S>
Mat2<S> frame(cplx z, const S& lambda, Sheet sheet = Sheet::principal) {
  const S s = sqrt_lambda(lambda, sheet);
  const S m = S(kPi / 2.0) * (S(z) / s + S(std::conj(z)) * s);
  const S cm = cos(m);
  const S sm = sin(m);
  return {cm, S(kI) * sm / s, S(kI) * s * sm, cm};
}

/// M_lambda(tau) = F_lambda(tau) F_lambda(0)^{-1} = F_lambda(tau).
template <class S>
Mat2<S> monodromy(cplx tau, const S& lambda) {
  return frame(tau, lambda);
}

struct ClosingReport {
  int sign = 1;                   // the better of M = +1 and M = -1
  double value_deviation = 0.0;   // ||M - sign 1||
  double derivative_norm = 0.0;   // ||dM/dlambda||
  double tol = kStructuralTol;
  bool pass = false;
};

/// Evaluates M = +-1 and M' = 0 for a monodromy carried as a jet.
ClosingReport closing_report(const Mat2<Jet>& monodromy_jet, double tol = kStructuralTol);

/// Closing conditions of the round cylinder at (lambda0, tau).
ClosingReport check_closing(cplx lambda0, cplx tau, double tol = kStructuralTol);

}  // namespace bubbleton

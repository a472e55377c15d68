#include "bubbleton/cylinder.hpp"

namespace bubbleton {

ClosingReport closing_report(const Mat2<Jet>& monodromy_jet, double tol) {
  const Mat2<cplx> value = value_part(monodromy_jet);
  const double plus = distance(value, Mat2<cplx>::identity());
  const double minus = norm(value + Mat2<cplx>::identity());
  ClosingReport report;
  report.sign = plus <= minus ? 1 : -1;
  report.value_deviation = std::min(plus, minus);
  report.derivative_norm = norm(derivative_part(monodromy_jet));
  report.tol = tol;
  report.pass = report.value_deviation <= tol && report.derivative_norm <= tol;
  return report;
}

ClosingReport check_closing(cplx lambda0, cplx tau, double tol) {
  return closing_report(monodromy(tau, Jet::variable(lambda0)), tol);
}

}  // namespace bubbleton

#include <cmath>
#include <string>

#include <json.hpp>

#include "bubbleton/io.hpp"

namespace bubbleton {

namespace {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  double tol(double default_tol) const { return report_.options.tol_override.value_or(default_tol); }

  // Passes when |measured - expected| <= tolerance.
  void near(std::string name, int k, double measured, double expected, double default_tol, std::string detail = {}) {
    const double t = tol(default_tol);
    report_.records.push_back(
        {std::move(name), k, measured, expected, t, std::abs(measured - expected) <= t, std::move(detail)});
  }

  // Passes when measured <= tolerance.
  void bound(std::string name, int k, double measured, double default_tol, std::string detail = {}) {
    const double t = tol(default_tol);
    report_.records.push_back({std::move(name), k, measured, 0.0, t, measured <= t, std::move(detail)});
  }

  // Passes when measured >= minimum.
  void count(std::string name, int k, std::size_t measured, std::size_t minimum) {
    report_.records.push_back({std::move(name), k, double(measured), double(minimum), 0.0, measured >= minimum,
                               "minimum " + std::to_string(minimum)});
  }

  void failed(std::string name, int k, const std::string& why) {
    report_.records.push_back({std::move(name), k, std::nan(""), 0.0, 0.0, false, why});
  }

 private:
  VerifyReport& report_;
};

void verify_lobes(Recorder& rec, int k, int samples) {
  const double alpha = alpha_for_lobes(k);
  const double ra = std::sqrt(alpha);
  rec.near("alpha_sum_identity", k, 1.0 / ra + ra, 2.0 * k, 1e-12);
  rec.near("alpha_difference_identity", k, 1.0 / ra - ra, 2.0 * std::sqrt(double(k) * k - 1.0), 1e-12);

  const BubbletonParams params = BubbletonParams::single(k);
  const ClosingReport closing = closing_report(dressed_frame(cplx(1.0), Jet::variable(1.0), params));
  rec.bound("bubbleton_closing_value", k, closing.value_deviation, 1e-10, "sign " + std::to_string(closing.sign));
  rec.bound("bubbleton_closing_derivative", k, closing.derivative_norm, 1e-10);

  try {
    const Mat2<cplx> limit = residue_check(k);
    const Mat2<cplx> exact = residue_limit_closed_form(k);
    rec.bound("removable_singularity", k, distance(limit, exact) / norm(exact), 1e-6,
              "E12 coefficient " + format_double(limit.b.imag()));
  } catch (const Error& e) {
    rec.failed("removable_singularity", k, e.what());
  }

  std::vector<cplx> zs(std::size_t(samples) + 1);
  for (int i = 0; i <= samples; ++i) zs[i] = double(i) / samples;
  double planarity = 0.0;
  for (const Mat2<cplx>& m : sample_immersion_matrices(params, zs))
    planarity = std::max({planarity, std::abs(m.b.imag()), std::abs(m.c.imag())});
  rec.bound("planarity", k, planarity, 1e-10);

  BubbletonParams printed = params;
  printed.h = kPrintedCurveH;
  const std::vector<Vec3> pipeline = sample_immersion(printed, zs);
  // Translation fixed at x = 0, then held for every sample.
  const Point2 shift = bubbleton_curve_closed_form(0.0, k) - plane_coordinates(pipeline.front());
  double equivalence = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const Point2 d = bubbleton_curve_closed_form(zs[i].real(), k) - (plane_coordinates(pipeline[i]) + shift);
    equivalence = std::max(equivalence, norm(d));
  }
  rec.bound("closed_form_equivalence", k, equivalence, 1e-9,
            "translation (" + format_double(shift.x) + ", " + format_double(shift.y) + ")");

  try {
    CurveOptions co;
    co.samples = samples;
    const PlanarCurve curve = extract_planar_curve(params, co);
    const TurningNumber tn = turning_number(curve);
    rec.near("turning_number", k, tn.raw, 2.0 * k - 1.0, 1e-6, "samples " + std::to_string(tn.samples));
    rec.near("turning_integral_cross_check", k, printed_turning_integral(k), 2.0 * k - 1.0, 1e-6);
    // A count, so the tolerance override does not apply.
    const auto crossings = self_intersections(curve);
    rec.count("self_intersections", k, crossings.size(), 1);
  } catch (const Error& e) {
    rec.failed("turning_number", k, e.what());
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.options = options;
  Recorder rec(report);

  const ClosingReport cylinder = check_closing(1.0, 1.0);
  rec.bound("cylinder_closing_value", 0, cylinder.value_deviation, 1e-12, "sign " + std::to_string(cylinder.sign));
  rec.bound("cylinder_closing_derivative", 0, cylinder.derivative_norm, 1e-12);

  for (int k : options.ks) verify_lobes(rec, k, options.samples);

  report.pass = !report.records.empty();
  for (const CheckRecord& r : report.records) report.pass = report.pass && r.pass;
  return report;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["parameters"] = {{"K", report.options.ks},
                     {"samples", report.options.samples},
                     {"tol_override", report.options.tol_override ? nlohmann::ordered_json(*report.options.tol_override)
                                                                  : nlohmann::ordered_json(nullptr)}};
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& r : report.records) {
    checks.push_back({{"name", r.name},
                      {"K", r.k},
                      {"measured", r.measured},
                      {"expected", r.expected},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass},
                      {"detail", r.detail}});
  }
  j["pass"] = report.pass;
  return j.dump(2) + "\n";
}

}  // namespace bubbleton

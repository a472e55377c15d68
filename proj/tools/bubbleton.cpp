// Command-line front end: verify, curve, surface, turning-number, residue.
//
// Exit codes: 0 pass, 1 verification failure, 2 invalid configuration,
// 3 I/O failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bubbleton/io.hpp"

namespace {

using namespace bubbleton;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<int> ks;
  std::vector<int> lobes;
  int samples = 0;  // set from the subcommand default unless given
  int nx = 128;
  int ny = 128;
  double h = -0.5;
  double y_min = -3.0;
  double y_max = 3.0;
  std::string out;
  std::string svg;
  std::optional<double> tol;
};

void check_lobe_list(const std::vector<int>& ks) {
  if (ks.empty()) throw ConfigError("at least one lobe number K is required");
  std::set<int> seen;
  for (int k : ks) {
    if (k < 2) throw ConfigError("lobe number K must be an integer >= 2, got " + std::to_string(k));
    if (!seen.insert(k).second) throw ConfigError("lobe number " + std::to_string(k) + " appears more than once");
  }
}

void check_samples(int n, const char* what) {
  if (n < 16) throw ConfigError(std::string(what) + " must be >= 16, got " + std::to_string(n));
}

void check_h(double h) {
  if (!std::isfinite(h) || h == 0.0) throw ConfigError("H must be finite and nonzero");
}

int single_k(const Options& o) {
  check_lobe_list(o.ks);
  if (o.ks.size() != 1) throw ConfigError("this command takes a single K");
  return o.ks.front();
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    if (!std::cout) throw Error(Errc::io_failure, "cannot write to stdout");
  } else {
    write_file_atomically(path, content);
  }
}

int cmd_verify(const Options& o) {
  check_lobe_list(o.ks);
  check_samples(o.samples, "--samples");
  if (o.tol && !(*o.tol >= 0.0)) throw ConfigError("--tol must be non-negative");
  VerifyOptions vo;
  vo.ks = o.ks;
  vo.samples = o.samples;
  vo.tol_override = o.tol;
  const VerifyReport report = run_verify(vo);
  emit(o.out, report_to_json(report));
  return report.pass ? kExitPass : kExitFail;
}

int cmd_curve(const Options& o) {
  const int k = single_k(o);
  check_samples(o.samples, "--samples");
  check_h(o.h);
  CurveOptions co;
  co.samples = o.samples;
  co.refine = false;
  const PlanarCurve curve = extract_planar_curve(BubbletonParams::single(k, o.h), co);
  if (!o.out.empty() || o.svg.empty()) {
    std::ostringstream csv;
    write_curve_csv(csv, curve);
    emit(o.out, csv.str());
  }
  if (!o.svg.empty()) {
    std::ostringstream svg;
    write_curve_svg(svg, curve);
    write_file_atomically(o.svg, svg.str());
  }
  return kExitPass;
}

int cmd_surface(const Options& o) {
  if (!o.ks.empty() && !o.lobes.empty()) throw ConfigError("give either --K or --lobes, not both");
  const std::vector<int>& ks = o.lobes.empty() ? o.ks : o.lobes;
  check_lobe_list(ks);
  if (o.nx < 2 || o.ny < 2) throw ConfigError("--nx and --ny must be >= 2");
  if (!(std::isfinite(o.y_min) && std::isfinite(o.y_max) && o.y_min < o.y_max))
    throw ConfigError("--y-min must be smaller than --y-max");
  check_h(o.h);
  const SurfaceMesh mesh = surface_mesh(BubbletonParams::multi(ks, o.h), o.nx, o.ny, {o.y_min, o.y_max});
  std::ostringstream obj;
  write_mesh_obj(obj, mesh);
  emit(o.out, obj.str());
  return kExitPass;
}

int cmd_turning_number(const Options& o) {
  check_lobe_list(o.ks);
  check_samples(o.samples, "--samples");
  std::ostringstream text;
  bool pass = true;
  for (int k : o.ks) {
    CurveOptions co;
    co.samples = o.samples;
    const PlanarCurve curve = extract_planar_curve(BubbletonParams::single(k), co);
    const TurningNumber tn = turning_number(curve);
    const std::size_t crossings = self_intersections(curve).size();
    char line[160];
    std::snprintf(line, sizeof line, "K=%d turning_number=%d raw=%.9f expected=%d self_intersections=%zu\n", k,
                  tn.value, tn.raw, 2 * k - 1, crossings);
    text << line;
    pass = pass && tn.value == 2 * k - 1 && crossings > 0;
  }
  emit(o.out, text.str());
  return pass ? kExitPass : kExitFail;
}

int cmd_residue(const Options& o) {
  check_lobe_list(o.ks);
  std::ostringstream text;
  for (int k : o.ks) {
    const Mat2<cplx> limit = residue_check(k);
    const Mat2<cplx> exact = residue_limit_closed_form(k);
    char line[200];
    std::snprintf(line, sizeof line, "K=%d coefficient=%.10g closed_form=%.10g relative_error=%.3e\n", k,
                  limit.b.imag(), exact.b.imag(), distance(limit, exact) / norm(exact));
    text << line;
  }
  emit(o.out, text.str());
  return kExitPass;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::invalid_lobe_number:
    case Errc::duplicate_lobe:
    case Errc::invalid_argument:
    case Errc::zero_argument:
      return kExitConfig;
    case Errc::io_failure:
      return kExitIo;
    default:
      return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CMC bubbletons by dressing the round cylinder"};
  app.require_subcommand(1);
  Options o;

  auto add_ks = [&](CLI::App* sub, bool list) {
    sub->add_option("--K", o.ks, list ? "Lobe numbers, comma separated" : "Lobe number")->delimiter(',');
  };

  auto* verify = app.add_subcommand("verify", "Run the invariant checks and print a JSON report");
  add_ks(verify, true);
  // Each subcommand has its own sample default, applied after parsing.
  auto* verify_samples = verify->add_option("--samples", o.samples, "Curve samples per K (default 4096)");
  verify->add_option("--tol", o.tol, "Replace every tolerance");
  verify->add_option("--out", o.out, "JSON output file (default stdout)");

  auto* curve = app.add_subcommand("curve", "Write the planar y = 0 curve as CSV and optionally SVG");
  add_ks(curve, false);
  auto* curve_samples = curve->add_option("--samples", o.samples, "Uniform samples on [0, 1] (default 2048)");
  curve->add_option("--H", o.h, "Mean curvature")->default_val(-0.5);
  curve->add_option("--out", o.out, "CSV output file (default stdout)");
  curve->add_option("--svg", o.svg, "SVG plot output file");

  auto* surface = app.add_subcommand("surface", "Write a quad mesh of the surface as OBJ");
  add_ks(surface, false);
  surface->add_option("--lobes", o.lobes, "Distinct lobe numbers of a multi-bubbleton")->delimiter(',');
  surface->add_option("--nx", o.nx, "Grid points in x")->default_val(128);
  surface->add_option("--ny", o.ny, "Grid points in y")->default_val(128);
  surface->add_option("--y-min", o.y_min, "Lower y bound")->default_val(-3.0);
  surface->add_option("--y-max", o.y_max, "Upper y bound")->default_val(3.0);
  surface->add_option("--H", o.h, "Mean curvature")->default_val(-0.5);
  surface->add_option("--out", o.out, "OBJ output file (default stdout)");

  auto* turning = app.add_subcommand("turning-number", "Turning number and self-intersections of the y = 0 curve");
  add_ks(turning, true);
  auto* turning_samples = turning->add_option("--samples", o.samples, "Initial curve samples (default 2048)");
  turning->add_option("--out", o.out, "Text output file (default stdout)");

  auto* residue = app.add_subcommand("residue", "Limit of the dressed frame at the removable singularity");
  add_ks(residue, true);
  residue->add_option("--out", o.out, "Text output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  // The default K applies only when neither --K nor --lobes was given.
  if (o.ks.empty() && o.lobes.empty()) o.ks = {2};
  if (verify_samples->count() + curve_samples->count() + turning_samples->count() == 0)
    o.samples = verify->parsed() ? 4096 : 2048;

  try {
    if (verify->parsed()) return cmd_verify(o);
    if (curve->parsed()) return cmd_curve(o);
    if (surface->parsed()) return cmd_surface(o);
    if (turning->parsed()) return cmd_turning_number(o);
    return cmd_residue(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

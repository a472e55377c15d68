#include "bubbleton/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

namespace bubbleton {

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // no "-0" in text output
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

void write_curve_csv(std::ostream& out, const PlanarCurve& curve) {
  out << "x,X,Z\n";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    out << format_double(curve.params[i]) << ',' << format_double(curve.points[i].x) << ','
        << format_double(curve.points[i].y) << '\n';
  }
}

void write_curve_svg(std::ostream& out, const PlanarCurve& curve) {
  constexpr double kSize = 800.0;
  constexpr double kMargin = 0.05 * kSize;
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const Point2& p : curve.points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-300});
  const double scale = (kSize - 2.0 * kMargin) / span;
  // Centre the shorter axis; SVG y grows downwards.
  const double ox = kMargin + 0.5 * ((kSize - 2.0 * kMargin) - scale * (xmax - xmin));
  const double oy = kMargin + 0.5 * ((kSize - 2.0 * kMargin) - scale * (ymax - ymin));

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n"
      << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n"
      << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" stroke-linejoin=\"round\" points=\"";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const Point2& p = curve.points[i];
    if (i > 0) out << ' ';
    out << format_double(ox + scale * (p.x - xmin)) << ',' << format_double(kSize - (oy + scale * (p.y - ymin)));
  }
  out << "\"/>\n</svg>\n";
}

void write_mesh_obj(std::ostream& out, const SurfaceMesh& mesh) {
  for (const Vec3& p : mesh.points)
    out << "v " << format_double(p.x1) << ' ' << format_double(p.x2) << ' ' << format_double(p.x3) << '\n';
  for (int j = 0; j + 1 < mesh.ny; ++j) {
    for (int i = 0; i + 1 < mesh.nx; ++i) {
      const long v00 = long(j) * mesh.nx + i + 1;  // OBJ indices are 1-based
      const long v10 = v00 + 1;
      const long v01 = v00 + mesh.nx;
      const long v11 = v01 + 1;
      out << "f " << v00 << ' ' << v10 << ' ' << v11 << ' ' << v01 << '\n';
    }
  }
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_failure, "cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw Error(Errc::io_failure, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(Errc::io_failure, "cannot move output into " + path.string());
  }
}

}  // namespace bubbleton

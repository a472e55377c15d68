#pragma once

// Exporters and the verification report used by the command-line tool.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bubbleton/geometry.hpp"
#include "bubbleton/kernels.hpp"

namespace bubbleton {

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_double(double value);

/// Columns x, X, Z with a header row.
void write_curve_csv(std::ostream& out, const PlanarCurve& curve);

/// A polyline scaled into an 800x800 viewBox with a 5% margin and equal aspect.
void write_curve_svg(std::ostream& out, const PlanarCurve& curve);

/// ASCII Wavefront OBJ: one `v` per grid point in row-major order and one quad
/// `f` per grid cell. Seam vertices are duplicated.
void write_mesh_obj(std::ostream& out, const SurfaceMesh& mesh);

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomically(const std::filesystem::path& path, const std::string& content);

struct CheckRecord {
  std::string name;
  int k = 0;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::vector<int> ks{2};
  int samples = 4096;
  std::optional<double> tol_override;  // replaces every tolerance when set
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<CheckRecord> records;
  bool pass = false;
};

/// Per K: alpha identities, cylinder and bubbleton closing, removable
/// singularity, planarity, closed form vs pipeline, turning number and a
/// self-intersection witness.
VerifyReport run_verify(const VerifyOptions& options);

/// JSON with a top-level "schema": 1.
std::string report_to_json(const VerifyReport& report);

}  // namespace bubbleton

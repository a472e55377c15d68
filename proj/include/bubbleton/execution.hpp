#pragma once

namespace bubbleton {

/// Kernels come in a plain-loop reference form and an OpenMP form. Both produce
/// identical results; results are always assembled by index.
enum class Execution { serial, parallel };

}  // namespace bubbleton

#pragma once

namespace dsop {

/// Selects the OpenMP kernel or its serial reference. Both produce
/// identical results; the serial path is kept for testing and benchmarks.
enum class Exec { serial, parallel };

/// Threads available to parallel kernels (1 without OpenMP).
int max_threads();

}  // namespace dsop

#pragma once

namespace conelab {

// Selects between the OpenMP kernel and the serial reference loop. Both
// produce identical results; the serial path exists for testing and
// benchmarking.
enum class Exec { Serial, Parallel };

int max_threads();

}  // namespace conelab

#pragma once

namespace mwis {

/// Selects between the serial reference loop and the OpenMP kernel for the
/// operations that have both.
enum class Execution { Serial, Parallel };

/// Number of OpenMP threads available to Parallel kernels.
int available_threads();

}  // namespace mwis

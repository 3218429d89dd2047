#pragma once

namespace sll {

/// Execution policy for the data-parallel kernels. Serial runs are the
/// reference path; parallel runs must produce identical, identically ordered results.
enum class Exec { Serial, Parallel };

}  // namespace sll

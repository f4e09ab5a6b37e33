#pragma once

namespace gridsalvage {

// Thread budget for internal parallelism: the value of GRIDSALVAGE_THREADS,
// or the hardware concurrency when the variable is unset, empty, zero or
// unparseable.  Always at least 1.
int thread_budget();

}  // namespace gridsalvage

#pragma once

namespace qwalk2 {

// Upper bound on OpenMP threads; honours QWALK2_THREADS when set.
int max_threads();

// Reads QWALK2_THREADS and caps the OpenMP team size accordingly. Invalid or
// non-positive values are ignored.
void apply_thread_limit_from_env();

}  // namespace qwalk2

#pragma once

namespace lpscalar {

/// Worker cap from LPSCALAR_THREADS (0 or unset = hardware concurrency).
int thread_budget();

}  // namespace lpscalar

#pragma once

#include <functional>

namespace gsss {

/// Worker count: GSSS_THREADS when set and positive, otherwise the hardware
/// concurrency (GSSS_THREADS=0 also means auto).
int worker_count();

/// Runs fn(i) for i in [0, n). Work items are distributed over workers; every
/// item's result must depend only on its index so the outcome is independent
/// of scheduling. Exceptions from items are rethrown on the caller thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace gsss

#pragma once

namespace antisym::parallel {

/// Threads available to OpenMP regions (1 when built without OpenMP).
int max_threads();

/// Caps subsequent OpenMP regions at `threads` workers; values < 1 are ignored.
void set_threads(int threads);

}  // namespace antisym::parallel

// SPDX-License-Identifier: Apache-2.0
//
// Process-wide worker count and a static-partition parallel loop.

#pragma once

#include <cstddef>
#include <functional>

namespace shk {

/// 0 restores the default (hardware concurrency, at least 1).
void set_worker_threads(int n);
int worker_threads();

/// Calls fn(i) for i in [0, n); iterations are spread over worker_threads()
/// threads. fn must only touch per-index state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace shk

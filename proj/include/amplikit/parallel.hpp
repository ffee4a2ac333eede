#pragma once

#include <cstddef>
#include <functional>

namespace amplikit {

/// Worker count for grid sweeps: hardware concurrency, capped by the
/// AMPLIKIT_THREADS environment variable when set.
std::size_t configured_thread_count();

/// Runs body(0..count-1) across workers. Each index owns its output slot,
/// so results land in deterministic grid order regardless of scheduling.
void parallel_for_index(std::size_t count,
                        const std::function<void(std::size_t)>& body);

}  // namespace amplikit

#ifndef INVARIANTS_PARALLEL_HPP
#define INVARIANTS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace invariants::par {

enum class Mode { serial, parallel };

// Process-wide default; starts as parallel when built with OpenMP.
Mode default_mode();
void set_default_mode(Mode m);

int max_threads();

// Runs body(0..n-1). Bodies must write disjoint output slots; with exact
// arithmetic and slot-wise writes the result is identical in both modes.
void parallel_for(std::size_t n, Mode mode, const std::function<void(std::size_t)>& body);

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  parallel_for(n, default_mode(), body);
}

}  // namespace invariants::par

#endif

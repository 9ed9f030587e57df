#include "invariants/parallel.hpp"

#include <atomic>

#ifdef INVARIANTS_HAVE_OPENMP
#include <omp.h>
#endif

namespace invariants::par {

namespace {
std::atomic<Mode> g_mode{
#ifdef INVARIANTS_HAVE_OPENMP
    Mode::parallel
#else
    Mode::serial
#endif
};
}  // namespace

Mode default_mode() { return g_mode.load(); }
void set_default_mode(Mode m) { g_mode.store(m); }

int max_threads() {
#ifdef INVARIANTS_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void parallel_for(std::size_t n, Mode mode, const std::function<void(std::size_t)>& body) {
#ifdef INVARIANTS_HAVE_OPENMP
  if (mode == Mode::parallel && n > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace invariants::par

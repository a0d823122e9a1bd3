#include "torelli/parallel.hpp"

#include <atomic>

namespace torelli {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(); }
void set_parallel(bool on) { g_parallel.store(on); }

void parallel_for(int n, const std::function<void(int)>& f) {
  if (parallel_enabled()) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) f(i);
  } else {
    for (int i = 0; i < n; ++i) f(i);
  }
}

}  // namespace torelli

#pragma once

#include <functional>

// Verification drivers loop over many independent checks (relations, twist
// words, matrix columns).  parallel_for runs such loops with OpenMP when
// enabled; the serial path is the reference used by tests, and results are
// written to preassigned slots so both paths aggregate identically.

namespace torelli {

bool parallel_enabled();
void set_parallel(bool on);

void parallel_for(int n, const std::function<void(int)>& f);

struct SerialGuard {
  bool saved;
  SerialGuard() : saved(parallel_enabled()) { set_parallel(false); }
  ~SerialGuard() { set_parallel(saved); }
};

}  // namespace torelli

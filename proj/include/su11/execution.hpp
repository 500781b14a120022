#pragma once

namespace su11 {

// Selects between the OpenMP kernels and their serial reference path. Both
// paths run the same arithmetic in the same order per element, so results are
// bitwise identical.
enum class Execution { serial, parallel };

// Sets the OpenMP team size used by Execution::parallel kernels. n <= 0 keeps
// the runtime default.
void set_thread_count(int n);
int thread_count();

}  // namespace su11

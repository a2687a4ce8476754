#pragma once

#include <exception>
#include <vector>

namespace kalai {

// Execution switch for the batch kernels: every parallel kernel in this
// project writes results into preallocated slots indexed by the loop counter,
// so serial and parallel runs produce identical output. The serial path is
// the reference implementation the tests compare against.
enum class Exec { Serial, Parallel };

// Runs fn(i) for i in [0, n). Exceptions are captured per index and the one
// with the smallest index is rethrown after the loop, matching what the
// serial path would have thrown first.
template <class F>
void parallel_for(int n, Exec exec, F&& fn) {
    if (exec == Exec::Serial) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errs(n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        try {
            fn(i);
        } catch (...) {
            errs[i] = std::current_exception();
        }
    }
    for (int i = 0; i < n; ++i)
        if (errs[i]) std::rethrow_exception(errs[i]);
}

}  // namespace kalai

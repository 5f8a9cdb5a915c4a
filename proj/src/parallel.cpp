#include "nltoric/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nltoric {

int effective_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* env = std::getenv("NL_TORIC_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

void apply_thread_cap() {
#ifdef _OPENMP
    omp_set_num_threads(effective_threads());
#endif
}

}  // namespace nltoric

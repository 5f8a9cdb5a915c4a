#ifndef NLTORIC_PARALLEL_HPP
#define NLTORIC_PARALLEL_HPP

// Execution mode for the data-parallel kernels. Every parallel kernel has a
// serial twin that produces identical output; tests compare the two and the
// benchmark target times them against each other.

namespace nltoric {

enum class Exec { serial, parallel };

// Honors NL_TORIC_THREADS when set; otherwise the OpenMP default.
int effective_threads();
void apply_thread_cap();

}  // namespace nltoric

#endif

#ifndef BG_PARALLEL_HPP
#define BG_PARALLEL_HPP

namespace bg::par {

/// True when the library was compiled with OpenMP.
bool enabled();

/// Worker count used by the parallel kernels: BG_THREADS when set to a
/// positive integer, otherwise the OpenMP default (hardware parallelism).
int max_threads();

/// Overrides the worker count for subsequent parallel regions.
void set_threads(int threads);

}  // namespace bg::par

#endif  // BG_PARALLEL_HPP

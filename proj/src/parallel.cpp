#include "bg/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bg::par {

namespace {

int env_threads() {
  const char* raw = std::getenv("BG_THREADS");
  if (raw == nullptr) return 0;
  try {
    const int t = std::stoi(raw);
    return t > 0 ? t : 0;
  } catch (...) {
    return 0;
  }
}

int& override_threads() {
  static int threads = env_threads();
  return threads;
}

}  // namespace

bool enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
  if (override_threads() > 0) return override_threads();
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int threads) { override_threads() = threads > 0 ? threads : 0; }

}  // namespace bg::par

#include "qwalk2/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include <omp.h>

namespace qwalk2 {

namespace {

int env_thread_limit() {
  const char* raw = std::getenv("QWALK2_THREADS");
  if (raw == nullptr) return 0;
  int value = 0;
  const auto* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value <= 0) return 0;
  return value;
}

}  // namespace

int max_threads() {
  const int limit = env_thread_limit();
  const int available = omp_get_max_threads();
  return limit > 0 && limit < available ? limit : available;
}

void apply_thread_limit_from_env() {
  const int limit = env_thread_limit();
  if (limit > 0) omp_set_num_threads(limit);
}

}  // namespace qwalk2

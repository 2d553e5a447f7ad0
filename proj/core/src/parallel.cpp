#include "disnet/parallel.hpp"

#include <cstdlib>

namespace disnet {

std::size_t resolve_threads(std::size_t requested) {
  std::size_t n = requested;
  if (n == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    n = hw > 0 ? hw : 1;
  }
  if (const char* env = std::getenv("DISNET_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0 && cap < n) n = cap;
  }
  return n;
}

}  // namespace disnet

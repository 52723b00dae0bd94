#include "grpoly/parallel.hpp"

#include <cstdlib>
#include <string>

namespace grpoly {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("GRPOLY_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace grpoly

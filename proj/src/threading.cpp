#include "cdl/threading.hpp"

#include <cstdlib>
#include <thread>

namespace cdl {

unsigned effective_threads(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("CDL_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n)
      n = static_cast<unsigned>(cap);
  }
  return n;
}

}  // namespace cdl

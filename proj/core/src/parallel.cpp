#include "jacobi/parallel.hpp"

#include <cstdlib>
#include <string>

namespace jacobi {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("JD_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 1) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace jacobi

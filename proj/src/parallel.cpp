#include "epspectra/parallel.hpp"

#include <cstdlib>
#include <string>

namespace epspectra {

int default_thread_count() {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EPSPECTRA_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap < threads) threads = cap;
    } catch (const std::exception&) {
      // unparsable cap: ignore it
    }
  }
  return threads < 1 ? 1 : threads;
}

}  // namespace epspectra

#include "qqkit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qq {

unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QQKIT_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return std::min<unsigned>(hw, static_cast<unsigned>(v));
    } catch (const std::exception&) {
    }
  }
  return hw;
}

}  // namespace qq

#include "lpscalar/threading.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace lpscalar {

int thread_budget() {
  const char* env = std::getenv("LPSCALAR_THREADS");
  int cap = 0;
  if (env != nullptr) {
    try {
      cap = std::stoi(env);
    } catch (...) {
      cap = 0;
    }
  }
  if (cap > 0) return cap;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace lpscalar

#include "sanovcat/parallel.hpp"

namespace sanovcat {

namespace {
std::atomic<unsigned> configured{0};
}

void set_thread_count(unsigned n) { configured.store(n); }

unsigned thread_count() {
  unsigned n = configured.load();
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace sanovcat

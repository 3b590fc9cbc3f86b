#include "wellscmp/parallel.hpp"

#include <algorithm>
#include <mutex>

namespace wellscmp {

static unsigned g_jobs = 0;
static thread_local bool g_inside = false;

unsigned jobs() {
  if (g_jobs > 0) return g_jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void set_jobs(unsigned n) { g_jobs = n; }

void parallel_blocks(size_t blocks, const std::function<void(size_t)>& fn) {
  if (blocks == 0) return;
  unsigned workers = std::min<size_t>(jobs(), blocks);
  if (workers <= 1 || g_inside) {
    for (size_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mx;
  std::vector<std::thread> pool;
  auto work = [&]() {
    g_inside = true;
    for (;;) {
      size_t b = next.fetch_add(1);
      if (b >= blocks) break;
      try {
        fn(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mx);
        if (!err) err = std::current_exception();
        break;
      }
    }
    g_inside = false;
  };
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace wellscmp

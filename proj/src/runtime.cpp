#include "lowtype/runtime.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace lowtype {

namespace {

long long env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return 0;
  try {
    return std::stoll(raw);
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

int effective_workers(int requested) {
  if (requested > 0) return requested;
  const long long from_env = env_number("WORKERS");
  if (from_env > 0) return static_cast<int>(from_env);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

long long effective_oracle_budget(long long requested) {
  if (requested > 0) return requested;
  const long long from_env = env_number("ORACLE_BUDGET");
  if (from_env > 0) return from_env;
  return 10'000'000;
}

void parallel_for(std::int64_t count, int workers,
                  const std::function<void(std::int64_t)>& body) {
  if (count <= 0) return;
  workers = std::min<std::int64_t>(std::max(workers, 1), count);
  if (workers == 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto run = [&] {
    while (true) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        body(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace lowtype

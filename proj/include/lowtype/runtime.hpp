#pragma once

#include <cstdint>
#include <functional>

namespace lowtype {

// Resolves a worker count: a positive request wins, otherwise the WORKERS
// environment variable, otherwise the hardware concurrency (at least 1).
int effective_workers(int requested = 0);

// Resolves the tableau-enumeration cap: a positive request wins, otherwise
// the ORACLE_BUDGET environment variable, otherwise 10^7.
long long effective_oracle_budget(long long requested = 0);

// Runs body(i) for i in [0, count).  Work is distributed over `workers`
// threads; bodies must write only to their own index so that results are
// identical for every worker count.
void parallel_for(std::int64_t count, int workers, const std::function<void(std::int64_t)>& body);

}  // namespace lowtype

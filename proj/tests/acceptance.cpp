// Acceptance suite: one line per criterion, exit 0 only if all pass.
//
// Every check is exact integer arithmetic; the only tolerances are the
// stated wall-clock budgets, which are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lowtype/branching.hpp"
#include "lowtype/embedding.hpp"
#include "lowtype/render.hpp"
#include "lowtype/runtime.hpp"
#include "lowtype/sl2.hpp"

using namespace lowtype;

namespace {

// Lowest types for m, d = 0..15, independently recomputed and frozen.
constexpr int kReferenceTable[16][16] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15},
    {0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2},
    {0, 3, 2, 3, 0, 3, 2, 3, 0, 3, 2, 3, 0, 3, 2, 3},
    {0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 5, 2, 3, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 2, 1},
    {0, 6, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 0},
    {0, 7, 2, 3, 0, 1, 2, 1, 0, 1, 2, 1, 0, 1, 0, 1},
    {0, 8, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 9, 2, 3, 0, 1, 2, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    {0, 10, 0, 2, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 11, 2, 3, 0, 1, 2, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    {0, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 13, 2, 3, 0, 1, 2, 1, 0, 1, 0, 1, 0, 1, 0, 1},
    {0, 14, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 15, 2, 3, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1},
};

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<bool(std::string&)> run;
};

bool check_reference_table(std::string& detail) {
  int mismatches = 0;
  for (int m = 0; m <= 15; ++m) {
    for (int d = 0; d <= 15; ++d) {
      if (lowest_type(m, d) != kReferenceTable[m][d]) ++mismatches;
    }
  }
  // The CLI rendering must reproduce the same grid byte-for-byte.
  std::ostringstream expected;
  for (int m = 0; m <= 15; ++m) {
    for (int d = 0; d <= 15; ++d) {
      if (d > 0) expected << ",";
      expected << kReferenceTable[m][d];
    }
    expected << "\n";
  }
  const bool csv_ok = render_table(15, 15, Format::csv) == expected.str();
  detail = "256 cells, " + std::to_string(mismatches) + " mismatches, csv " +
           (csv_ok ? "exact" : "DIFFERS");
  return mismatches == 0 && csv_ok;
}

bool check_closed_form(std::string& detail) {
  const int side = 41;
  std::vector<std::uint8_t> bad(side * side, 0);
  parallel_for(side * side, effective_workers(), [&](std::int64_t i) {
    const int m = static_cast<int>(i / side);
    const int d = static_cast<int>(i % side);
    if (lowest_type(m, d) != lowest_type_closed_form(m, d)) bad[static_cast<std::size_t>(i)] = 1;
  });
  long long mismatches = 0;
  for (auto b : bad) mismatches += b;
  detail = "1681 pairs, " + std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

bool check_hermite(std::string& detail) {
  long long failures = 0;
  for (int m = 0; m <= 20; ++m) {
    for (int d = 0; d <= 20; ++d) {
      if (!hermite_check(m, d)) ++failures;
    }
  }
  detail = "441 pairs, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool check_exterior_identity(std::string& detail) {
  long long checked = 0, failures = 0;
  for (int d = 0; d <= 13; ++d) {
    for (int k = 0; k <= d + 1; ++k) {
      ++checked;
      if (ext_power_character(k, d) != sym_power_character(k, d + 1 - k)) ++failures;
    }
  }
  detail = std::to_string(checked) + " pairs, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool check_bound_sharpness(std::string& detail) {
  std::ostringstream os;
  bool ok = true;
  for (int n = 3; n <= 7; ++n) {
    const BoundReport report = verify_bound(n, 10);
    bool witness_defining = false;
    for (const auto& [lambda, dim] : report.witnesses) {
      if (lambda == Partition({1})) witness_defining = true;
    }
    const bool good =
        report.violations.empty() && report.max_min_dim_found == n && witness_defining;
    ok = ok && good;
    os << " n=" << n << ":" << (good ? "ok" : "FAIL") << "(" << report.checked << ")";
  }
  detail = "sweeps" + os.str();
  return ok;
}

bool check_adjoint(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (int n = 3; n <= 7; ++n) {
    std::vector<int> parts{2};
    for (int i = 0; i < n - 2; ++i) parts.push_back(1);
    const auto dec = restrict_to_principal(Partition(parts), n);
    std::vector<BigInt> expected(static_cast<std::size_t>(2 * n - 1));
    for (int i = 1; i < n; ++i) expected[static_cast<std::size_t>(2 * i)] = 1;
    const bool good = dec == Sl2Decomposition(expected);
    ok = ok && good;
    os << " n=" << n << ":" << (good ? "ok" : "FAIL");
  }
  detail = "adjoint" + os.str();
  return ok;
}

bool check_oracles(std::string& detail) {
  long long principal_checked = 0, embedding_checked = 0, failures = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& lambda : partitions_with_at_most(8, n - 1)) {
      ++principal_checked;
      if (principal_character(lambda, n) != principal_character_oracle(lambda, n)) ++failures;
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (const auto& blocks : partitions_of(n, n)) {
      const EmbeddingSpec spec(blocks.parts());
      const auto weights = embedding_weights(spec);
      for (const auto& lambda : partitions_with_at_most(6, std::max(n - 1, 0))) {
        ++embedding_checked;
        if (embedding_character(lambda, spec) != ssyt_character(lambda, weights)) ++failures;
      }
    }
  }
  detail = std::to_string(principal_checked) + " principal + " +
           std::to_string(embedding_checked) + " embedding characters, " +
           std::to_string(failures) + " failures";
  return failures == 0;
}

bool check_semigroup(std::string& detail) {
  std::mt19937_64 rng(20240803);
  long long failures = 0;
  for (int i = 0; i < 500; ++i) {
    const int n = 3 + static_cast<int>(rng() % 3);
    const auto pool = partitions_with_at_most(6, n - 1);
    const Partition l1 = pool[static_cast<std::size_t>(rng() % pool.size())];
    const Partition l2 = pool[static_cast<std::size_t>(rng() % pool.size())];
    if (!semigroup_check(l1, l2, n)) ++failures;
  }
  detail = "500 pairs, " + std::to_string(failures) + " failures";
  return failures == 0;
}

bool check_parity_and_binary_bound(std::string& detail) {
  long long parity_failures = 0, bound_failures = 0;
  for (int m = 1; m <= 40; m += 2) {
    for (int d = 1; d <= 40; d += 2) {
      if (lowest_type(m, d) < 1) ++parity_failures;
    }
  }
  for (int m = 0; m <= 40; ++m) {
    for (int d = 2; d <= 40; ++d) {
      if (lowest_type(m, d) > d) ++bound_failures;
    }
  }
  detail = std::to_string(parity_failures) + " parity failures, " +
           std::to_string(bound_failures) + " bound failures";
  return parity_failures == 0 && bound_failures == 0;
}

bool check_embedding_bounds(std::string& detail) {
  long long specs = 0, violations = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& blocks : partitions_of(n, n)) {
      ++specs;
      const BoundReport report = verify_bound_embedding(EmbeddingSpec(blocks.parts()), 6);
      violations += static_cast<long long>(report.violations.size());
    }
  }
  detail = std::to_string(specs) + " embeddings, " + std::to_string(violations) + " violations";
  return violations == 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"lowest-type table matches the 16x16 reference", 5.0, check_reference_table},
      {"direct lowest type equals closed form for m,d <= 40", 60.0, check_closed_form},
      {"Hermite reciprocity of characters for m,d <= 20", 600.0, check_hermite},
      {"exterior power identity for d <= 13", 600.0, check_exterior_identity},
      {"minimal dimension bound is sharp for n in 3..7", 600.0, check_bound_sharpness},
      {"adjoint restriction gives exponents 2,4,...,2n-2", 600.0, check_adjoint},
      {"hook-content and Jacobi-Trudi match tableau enumeration", 600.0, check_oracles},
      {"semigroup additivity on 500 random pairs", 600.0, check_semigroup},
      {"odd-odd parity bound and l(m,d) <= d", 600.0, check_parity_and_binary_bound},
      {"embedding sweeps have no violations for n in 3..6", 600.0, check_embedding_bounds},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& criterion = criteria[i];
    std::string detail;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
      ok = false;
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.budget_seconds) {
      ok = false;
      detail += " [over budget " + std::to_string(criterion.budget_seconds) + "s]";
    }
    if (!ok) ++failures;
    std::printf("[%s] %2zu %s — %s (%.1fs)\n", ok ? "PASS" : "FAIL", i + 1,
                criterion.name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
  }
  if (failures == 0) {
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  }
  return failures == 0 ? 0 : 1;
}

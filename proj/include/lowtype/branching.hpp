#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "lowtype/laurent.hpp"
#include "lowtype/partition.hpp"
#include "lowtype/sl2.hpp"

namespace lowtype {

// The hook-content quotient failed to divide exactly.  The quotient is a
// polynomial for every valid input, so this always indicates a bug.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Tableau enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Result of an exhaustive minimal-dimension sweep over all canonical
// partitions with at most max_boxes boxes.
struct BoundReport {
  int n = 0;
  int max_boxes = 0;
  long long checked = 0;
  int max_min_dim_found = 0;
  std::vector<std::pair<Partition, int>> witnesses;  // all attaining the max
  std::vector<Partition> violations;                 // min_dim > n (expected empty)
};

// Canonical sl(n) highest weight: strips full columns so that at most n-1
// parts remain.  Rejects more than n parts.
Partition canonicalize(const Partition& lambda, int n);

// Number of semistandard tableaux of shape lambda with entries in 1..n,
// i.e. the dimension of L(lambda), by the exact hook-content product.
BigInt weyl_dimension(const Partition& lambda, int n);

// Character of L(lambda) restricted to the principal sl(2): the Schur
// polynomial evaluated at q^{n-1}, q^{n-3}, ..., q^{1-n}.  Computed exactly
// by factoring out q^{(n-1)|lambda|} and applying the hook-content product
// for s_lambda(1, t, ..., t^{n-1}) with t = q^{-2}; every division in the
// product is checked to be exact.
LaurentPoly principal_character(const Partition& lambda, int n);

// Independent check: sums q^{sum_i m_i w_i} over all semistandard tableaux
// of shape lambda with entries in 1..|weights|, where m_i counts entries
// equal to i.  Throws BudgetExceeded when the tableau count is above budget
// (budget <= 0 reads ORACLE_BUDGET, default 10^7).
LaurentPoly ssyt_character(const Partition& lambda, const std::vector<int>& weights,
                           long long budget = 0);

// ssyt_character at the principal weights n-1, n-3, ..., 1-n.
LaurentPoly principal_character_oracle(const Partition& lambda, int n, long long budget = 0);

Sl2Decomposition restrict_to_principal(const Partition& lambda, int n);

// 1 + min{ j : F_j occurs in L(lambda) under the principal sl(2) }.
int min_dim(const Partition& lambda, int n);

// Sweeps every canonical partition with at most n-1 parts and at most
// max_boxes boxes; requires n >= 3.  Output is independent of worker count.
BoundReport verify_bound(int n, int max_boxes, int workers = 0);

// Checks that lowest-weight occurrences add: for every F_{j1} in L(lambda1)
// and F_{j2} in L(lambda2), F_{j1+j2} must occur in L(lambda1 + lambda2)
// (componentwise part sum).
bool semigroup_check(const Partition& lambda1, const Partition& lambda2, int n);

}  // namespace lowtype

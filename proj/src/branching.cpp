#include "lowtype/branching.hpp"

#include <algorithm>

#include "lowtype/runtime.hpp"

namespace lowtype {

Partition canonicalize(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("canonicalize: n must be positive");
  if (lambda.num_parts() > n) throw std::invalid_argument("partition has more than n parts");
  if (lambda.num_parts() < n) return lambda;
  const int shift = lambda.part(n - 1);
  std::vector<int> parts;
  parts.reserve(static_cast<std::size_t>(n));
  for (int p : lambda.parts()) parts.push_back(p - shift);
  return Partition(std::move(parts));
}

namespace {

struct CellData {
  std::vector<int> contents;  // n + c(u) per cell
  std::vector<int> hooks;     // h(u) per cell
  long long n_lambda = 0;     // sum (i-1) lambda_i
};

CellData cell_data(const Partition& lambda, int n) {
  CellData data;
  const Partition conj = conjugate(lambda);
  for (int i = 0; i < lambda.num_parts(); ++i) {
    data.n_lambda += static_cast<long long>(i) * lambda.part(i);
    for (int j = 0; j < lambda.part(i); ++j) {
      data.contents.push_back(n + j - i);
      data.hooks.push_back(lambda.part(i) - j + conj.part(j) - i - 1);
    }
  }
  return data;
}

// p *= (1 - t^a), dense coefficients in t.
void multiply_one_minus_power(std::vector<BigInt>& p, int a) {
  const std::size_t old = p.size();
  p.resize(old + static_cast<std::size_t>(a));
  for (std::size_t j = old; j-- > 0;) {
    p[j + static_cast<std::size_t>(a)] -= p[j];
  }
}

// p /= (1 - t^h), throwing unless the division is exact.
void divide_one_minus_power(std::vector<BigInt>& p, int h) {
  const std::size_t sz = p.size();
  if (sz < static_cast<std::size_t>(h)) throw InexactDivision("quotient degree underflow");
  for (std::size_t j = static_cast<std::size_t>(h); j < sz; ++j) {
    p[j] += p[j - static_cast<std::size_t>(h)];
  }
  for (std::size_t j = sz - static_cast<std::size_t>(h); j < sz; ++j) {
    if (p[j] != 0) throw InexactDivision("hook factor does not divide");
  }
  p.resize(sz - static_cast<std::size_t>(h));
}

}  // namespace

BigInt weyl_dimension(const Partition& lambda0, int n) {
  if (n < 1) throw std::invalid_argument("weyl_dimension: n must be positive");
  const Partition lambda = canonicalize(lambda0, n);
  const CellData cells = cell_data(lambda, n);
  BigInt num = 1, den = 1;
  for (int a : cells.contents) num *= a;
  for (int h : cells.hooks) den *= h;
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("hook-content dimension is not integral");
  return q;
}

LaurentPoly principal_character(const Partition& lambda0, int n) {
  if (n < 2) throw std::invalid_argument("principal_character: n must be at least 2");
  const Partition lambda = canonicalize(lambda0, n);
  if (lambda.empty()) return LaurentPoly::one();

  const CellData cells = cell_data(lambda, n);
  std::vector<BigInt> poly{BigInt(1)};
  for (int a : cells.contents) multiply_one_minus_power(poly, a);
  for (int h : cells.hooks) divide_one_minus_power(poly, h);

  // poly now holds s_lambda(1, t, ..., t^{n-1}) / t^{n(lambda)}; substitute
  // t = q^{-2} and restore the leading factor q^{(n-1)|lambda|}.
  const std::int64_t center = static_cast<std::int64_t>(n - 1) * lambda.size();
  std::vector<std::pair<std::int64_t, BigInt>> terms;
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] != 0) {
      terms.emplace_back(center - 2 * (static_cast<std::int64_t>(j) + cells.n_lambda), poly[j]);
    }
  }
  return LaurentPoly::from_terms(terms);
}

LaurentPoly ssyt_character(const Partition& lambda, const std::vector<int>& weights,
                           long long budget) {
  const int n = static_cast<int>(weights.size());
  if (lambda.num_parts() > n) throw std::invalid_argument("partition has more than n parts");
  const long long cap = effective_oracle_budget(budget);
  if (weyl_dimension(lambda, std::max(n, 1)) > cap) {
    throw BudgetExceeded("tableau count exceeds enumeration budget");
  }
  if (lambda.empty()) return LaurentPoly::one();

  // Row-major fill; entry at (row, col) must be >= left neighbour and
  // > upper neighbour.  Accumulates q^{weight sum} per completed tableau.
  struct Cell {
    int row, col;
  };
  std::vector<Cell> cells;
  for (int i = 0; i < lambda.num_parts(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) cells.push_back({i, j});
  }
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(lambda.num_parts()));
  for (int i = 0; i < lambda.num_parts(); ++i) {
    fill[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(lambda.part(i)), 0);
  }
  std::map<std::int64_t, BigInt> acc;
  auto rec = [&](auto&& self, std::size_t idx, std::int64_t wsum) -> void {
    if (idx == cells.size()) {
      acc[wsum] += 1;
      return;
    }
    const auto [row, col] = cells[idx];
    int lo = 1;
    if (col > 0) lo = std::max(lo, fill[row][col - 1]);
    if (row > 0) lo = std::max(lo, fill[row - 1][col] + 1);
    for (int v = lo; v <= n; ++v) {
      fill[row][col] = v;
      self(self, idx + 1, wsum + weights[static_cast<std::size_t>(v - 1)]);
    }
  };
  rec(rec, 0, 0);

  std::vector<std::pair<std::int64_t, BigInt>> terms(acc.begin(), acc.end());
  return LaurentPoly::from_terms(terms);
}

LaurentPoly principal_character_oracle(const Partition& lambda0, int n, long long budget) {
  if (n < 2) throw std::invalid_argument("principal_character_oracle: n must be at least 2");
  const Partition lambda = canonicalize(lambda0, n);
  std::vector<int> weights(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) weights[static_cast<std::size_t>(i)] = n - 1 - 2 * i;
  return ssyt_character(lambda, weights, budget);
}

Sl2Decomposition restrict_to_principal(const Partition& lambda, int n) {
  return decompose(principal_character(lambda, n));
}

int min_dim(const Partition& lambda, int n) {
  return 1 + restrict_to_principal(lambda, n).lowest();
}

namespace {

BoundReport assemble_report(int n, int max_boxes, const std::vector<Partition>& lams,
                            const std::vector<int>& dims) {
  BoundReport report;
  report.n = n;
  report.max_boxes = max_boxes;
  report.checked = static_cast<long long>(lams.size());
  report.max_min_dim_found = *std::max_element(dims.begin(), dims.end());
  for (std::size_t i = 0; i < lams.size(); ++i) {
    if (dims[i] == report.max_min_dim_found) report.witnesses.emplace_back(lams[i], dims[i]);
    if (dims[i] > n) report.violations.push_back(lams[i]);
  }
  return report;
}

}  // namespace

BoundReport verify_bound(int n, int max_boxes, int workers) {
  if (n < 3) throw std::invalid_argument("verify_bound: n must be at least 3");
  if (max_boxes < 0) throw std::invalid_argument("verify_bound: negative box bound");
  const auto lams = partitions_with_at_most(max_boxes, n - 1);
  std::vector<int> dims(lams.size());
  parallel_for(static_cast<std::int64_t>(lams.size()), effective_workers(workers),
               [&](std::int64_t i) {
                 dims[static_cast<std::size_t>(i)] =
                     min_dim(lams[static_cast<std::size_t>(i)], n);
               });
  return assemble_report(n, max_boxes, lams, dims);
}

bool semigroup_check(const Partition& lambda1, const Partition& lambda2, int n) {
  if (n < 2) throw std::invalid_argument("semigroup_check: n must be at least 2");
  if (lambda1.num_parts() > n - 1 || lambda2.num_parts() > n - 1) {
    throw std::invalid_argument("semigroup_check: partitions must be canonical");
  }
  std::vector<int> sum(static_cast<std::size_t>(
      std::max(lambda1.num_parts(), lambda2.num_parts())));
  for (std::size_t i = 0; i < sum.size(); ++i) {
    sum[i] = lambda1.part(static_cast<int>(i)) + lambda2.part(static_cast<int>(i));
  }
  const auto d1 = restrict_to_principal(lambda1, n);
  const auto d2 = restrict_to_principal(lambda2, n);
  const auto d12 = restrict_to_principal(Partition(std::move(sum)), n);
  for (int j1 = 0; j1 <= d1.highest(); ++j1) {
    if (d1.mult(j1) == 0) continue;
    for (int j2 = 0; j2 <= d2.highest(); ++j2) {
      if (d2.mult(j2) == 0) continue;
      if (d12.mult(j1 + j2) == 0) return false;
    }
  }
  return true;
}

}  // namespace lowtype

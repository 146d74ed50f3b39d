#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lowtype {

// Young diagram / dominant weight: weakly decreasing non-negative parts,
// trailing zeros trimmed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Text format: comma-separated parts ("7,5,5,2"); "" is the empty partition.
  static Partition parse(const std::string& text);
  std::string str() const;

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long long size() const;       // number of boxes
  int part(int i) const;        // 0-based; 0 beyond the last part

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend std::ostream& operator<<(std::ostream& os, const Partition& p);

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

bool has_even_rows(const Partition& lambda);
bool has_even_columns(const Partition& lambda);

// All partitions rho with at most max_rows parts such that rho/lambda is a
// horizontal strip of d boxes (no two added boxes in the same column, i.e.
// rho_i >= lambda_i >= rho_{i+1}).  Duplicate-free, ascending lexicographic.
std::vector<Partition> add_horizontal_strips(const Partition& lambda, int d, int max_rows);

// Vertical-strip counterpart: 0 <= rho_i - lambda_i <= 1 with k added boxes.
std::vector<Partition> add_vertical_strips(const Partition& lambda, int k, int max_rows);

// Complement of lambda in the lambda_1 x n rectangle, i.e. the diagram of the
// dual representation L(lambda)* before canonicalization:
// (lambda_1 - lambda_n, ..., lambda_1 - lambda_1).
Partition dual_diagram(const Partition& lambda, int n);

struct StripCompletion {
  int boxes = 0;       // strip size added to the dual diagram
  Partition witness;   // a completed diagram satisfying the parity predicate
};

// Smallest d such that some horizontal-strip addition of d boxes to
// dual_diagram(mu, n) has even columns (n must be even), plus a witness.
StripCompletion find_even_column_completion(const Partition& mu, int n);

// Smallest k such that some vertical-strip addition of k boxes to
// dual_diagram(nu, n) has even rows (n must be odd), plus a witness.
StripCompletion find_even_row_completion(const Partition& nu, int n);

// All partitions with at most max_parts parts and at most max_boxes boxes,
// ordered by box count, then reverse-lexicographically within each count.
// This is the enumeration order used by the exhaustive bound checks.
std::vector<Partition> partitions_with_at_most(int max_boxes, int max_parts);

// Partitions of exactly `size` into at most max_parts parts, same ordering.
std::vector<Partition> partitions_of(int size, int max_parts);

}  // namespace lowtype

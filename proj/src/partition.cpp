#include "lowtype/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lowtype {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed partition: '" + text + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed partition: '" + text + "'");
    parts.push_back(value);
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) os << ",";
    os << parts_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << "(" << p.str() << ")";
}

long long Partition::size() const {
  long long total = 0;
  for (int p : parts_) total += p;
  return total;
}

int Partition::part(int i) const {
  if (i < 0) throw std::out_of_range("negative part index");
  return i < num_parts() ? parts_[static_cast<std::size_t>(i)] : 0;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(lambda.empty() ? 0 : static_cast<std::size_t>(lambda.part(0)), 0);
  for (int p : lambda.parts()) {
    for (int j = 0; j < p; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

bool has_even_rows(const Partition& lambda) {
  return std::all_of(lambda.parts().begin(), lambda.parts().end(),
                     [](int p) { return p % 2 == 0; });
}

bool has_even_columns(const Partition& lambda) {
  // Columns pair up exactly when consecutive rows agree two at a time.
  const int n = lambda.num_parts();
  if (n % 2 != 0) return false;
  for (int i = 0; i + 1 < n; i += 2) {
    if (lambda.part(i) != lambda.part(i + 1)) return false;
  }
  return true;
}

namespace {

void horizontal_rec(const Partition& lambda, int max_rows, int row, int remaining,
                    std::vector<int>& acc, std::vector<Partition>& out) {
  if (row == max_rows || (remaining == 0 && lambda.part(row) == 0)) {
    if (remaining == 0) {
      std::vector<int> parts(acc);
      for (int i = row; i < lambda.num_parts(); ++i) parts.push_back(lambda.part(i));
      out.emplace_back(std::move(parts));
    }
    return;
  }
  const int base = lambda.part(row);
  const int cap = row == 0 ? base + remaining : std::min(lambda.part(row - 1), base + remaining);
  for (int value = base; value <= cap; ++value) {
    acc.push_back(value);
    horizontal_rec(lambda, max_rows, row + 1, remaining - (value - base), acc, out);
    acc.pop_back();
  }
}

void vertical_rec(const Partition& lambda, int max_rows, int row, int remaining, int prev,
                  std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0 && lambda.part(row) == 0) {
    out.emplace_back(std::vector<int>(acc));
    return;
  }
  if (row == max_rows) return;
  const int base = lambda.part(row);
  for (int add = 0; add <= std::min(1, remaining); ++add) {
    const int value = base + add;
    if (value > prev) continue;
    acc.push_back(value);
    vertical_rec(lambda, max_rows, row + 1, remaining - add, value, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> add_horizontal_strips(const Partition& lambda, int d, int max_rows) {
  if (d < 0) throw std::invalid_argument("strip size must be non-negative");
  if (max_rows < 1) throw std::invalid_argument("max_rows must be positive");
  if (lambda.num_parts() > max_rows) throw std::invalid_argument("partition exceeds max_rows");
  std::vector<Partition> out;
  std::vector<int> acc;
  horizontal_rec(lambda, max_rows, 0, d, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> add_vertical_strips(const Partition& lambda, int k, int max_rows) {
  if (k < 0) throw std::invalid_argument("strip size must be non-negative");
  if (max_rows < 1) throw std::invalid_argument("max_rows must be positive");
  if (lambda.num_parts() > max_rows) throw std::invalid_argument("partition exceeds max_rows");
  std::vector<Partition> out;
  std::vector<int> acc;
  vertical_rec(lambda, max_rows, 0, k, lambda.part(0) + 1, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition dual_diagram(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (lambda.num_parts() > n) throw std::invalid_argument("partition has more than n parts");
  const int width = lambda.part(0);
  std::vector<int> parts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) parts[static_cast<std::size_t>(i)] = width - lambda.part(n - 1 - i);
  return Partition(std::move(parts));
}

namespace {

StripCompletion find_completion(const Partition& base, int n, bool columns) {
  // One strip that fixes every odd column (resp. row) always exists, so the
  // minimal strip size is at most the number of deficient lines.
  const int limit = static_cast<int>(base.size()) + n + 1;
  for (int d = 0; d <= limit; ++d) {
    const auto candidates = columns ? add_horizontal_strips(base, d, n)
                                    : add_vertical_strips(base, d, n);
    for (const Partition& rho : candidates) {
      if (columns ? has_even_columns(rho) : has_even_rows(rho)) return {d, rho};
    }
  }
  throw std::logic_error("even completion not found within the strip bound");
}

}  // namespace

StripCompletion find_even_column_completion(const Partition& mu, int n) {
  if (n < 1 || n % 2 != 0) throw std::invalid_argument("even-column completion needs even n");
  return find_completion(dual_diagram(mu, n), n, /*columns=*/true);
}

StripCompletion find_even_row_completion(const Partition& nu, int n) {
  if (n < 1 || n % 2 != 1) throw std::invalid_argument("even-row completion needs odd n");
  return find_completion(dual_diagram(nu, n), n, /*columns=*/false);
}

namespace {

void enumerate_rec(int remaining, int max_part, int max_parts, std::vector<int>& acc,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(std::vector<int>(acc));
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enumerate_rec(remaining - p, p, max_parts - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int size, int max_parts) {
  if (size < 0 || max_parts < 0) throw std::invalid_argument("negative enumeration bound");
  std::vector<Partition> out;
  std::vector<int> acc;
  enumerate_rec(size, size, max_parts, acc, out);
  return out;
}

std::vector<Partition> partitions_with_at_most(int max_boxes, int max_parts) {
  if (max_boxes < 0 || max_parts < 0) throw std::invalid_argument("negative enumeration bound");
  std::vector<Partition> out;
  for (int size = 0; size <= max_boxes; ++size) {
    auto block = partitions_of(size, max_parts);
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return out;
}

}  // namespace lowtype

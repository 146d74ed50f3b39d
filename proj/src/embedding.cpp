#include "lowtype/embedding.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "lowtype/runtime.hpp"

namespace lowtype {

EmbeddingSpec::EmbeddingSpec(std::vector<int> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("embedding needs at least one block");
  for (int b : blocks_) {
    if (b < 1) throw std::invalid_argument("embedding blocks must be positive");
    n_ += b;
  }
  std::sort(blocks_.begin(), blocks_.end(), std::greater<int>());
}

EmbeddingSpec EmbeddingSpec::parse(const std::string& text) {
  std::vector<int> blocks;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed composition: '" + text + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed composition: '" + text + "'");
    blocks.push_back(value);
  }
  return EmbeddingSpec(std::move(blocks));
}

std::string EmbeddingSpec::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) os << ",";
    os << blocks_[i];
  }
  return os.str();
}

std::vector<int> embedding_weights(const EmbeddingSpec& spec) {
  std::vector<int> weights;
  weights.reserve(static_cast<std::size_t>(spec.n()));
  for (int b : spec.blocks()) {
    for (int i = 0; i < b; ++i) weights.push_back(b - 1 - 2 * i);
  }
  return weights;
}

namespace {

// Laplace expansion down the columns with memoization on the set of unused
// rows; the column is determined by how many rows are already consumed.
class JacobiTrudiDet {
 public:
  explicit JacobiTrudiDet(std::vector<std::vector<LaurentPoly>> matrix)
      : m_(std::move(matrix)), size_(static_cast<int>(m_.size())) {}

  LaurentPoly eval() {
    if (size_ == 0) return LaurentPoly::one();
    return minor_det((1u << size_) - 1u);
  }

 private:
  LaurentPoly minor_det(std::uint32_t row_mask) {
    if (row_mask == 0) return LaurentPoly::one();
    auto it = memo_.find(row_mask);
    if (it != memo_.end()) return it->second;
    const int col = size_ - std::popcount(row_mask);
    LaurentPoly sum;
    int rank = 0;  // position of row i among the rows still in play
    for (int i = 0; i < size_; ++i) {
      if (!(row_mask & (1u << i))) continue;
      const LaurentPoly& entry = m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (!entry.is_zero()) {
        LaurentPoly term = entry * minor_det(row_mask & ~(1u << i));
        if (rank % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      ++rank;
    }
    memo_.emplace(row_mask, sum);
    return sum;
  }

  std::vector<std::vector<LaurentPoly>> m_;
  int size_;
  std::unordered_map<std::uint32_t, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly embedding_character(const Partition& lambda0, const EmbeddingSpec& spec) {
  const int n = spec.n();
  const Partition lambda = canonicalize(lambda0, n);
  if (lambda.empty()) return LaurentPoly::one();
  const int rows = lambda.num_parts();
  if (rows > 20) throw std::invalid_argument("partition too large for the determinant expansion");

  const int max_order = lambda.part(0) + rows;  // highest h index needed is lambda_1 - 1 + rows
  const auto h = sym_powers_from_weights(embedding_weights(spec), max_order);

  std::vector<std::vector<LaurentPoly>> matrix(
      static_cast<std::size_t>(rows), std::vector<LaurentPoly>(static_cast<std::size_t>(rows)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < rows; ++j) {
      const int order = lambda.part(i) - (i + 1) + (j + 1);
      if (order >= 0) matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          h[static_cast<std::size_t>(order)];
    }
  }
  return JacobiTrudiDet(std::move(matrix)).eval();
}

Sl2Decomposition restrict_via_embedding(const Partition& lambda, const EmbeddingSpec& spec) {
  return decompose(embedding_character(lambda, spec));
}

BoundReport verify_bound_embedding(const EmbeddingSpec& spec, int max_boxes, int workers) {
  if (max_boxes < 0) throw std::invalid_argument("verify_bound_embedding: negative box bound");
  const int n = spec.n();
  const auto lams = partitions_with_at_most(max_boxes, std::max(n - 1, 0));
  std::vector<int> dims(lams.size());
  parallel_for(static_cast<std::int64_t>(lams.size()), effective_workers(workers),
               [&](std::int64_t i) {
                 dims[static_cast<std::size_t>(i)] =
                     1 + restrict_via_embedding(lams[static_cast<std::size_t>(i)], spec).lowest();
               });
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

}  // namespace lowtype

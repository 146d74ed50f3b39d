#pragma once

#include <string>
#include <vector>

#include "lowtype/branching.hpp"
#include "lowtype/laurent.hpp"
#include "lowtype/partition.hpp"
#include "lowtype/sl2.hpp"

namespace lowtype {

// An sl(2) -> sl(n) homomorphism up to conjugacy: the defining representation
// restricts as F_{n_1 - 1} + ... + F_{n_p - 1} for block sizes
// n_1 >= ... >= n_p >= 1 with sum n.  Blocks are canonicalized to weakly
// decreasing order on construction.
class EmbeddingSpec {
 public:
  explicit EmbeddingSpec(std::vector<int> blocks);

  // Text format: comma-separated block sizes, e.g. "3,2,1".
  static EmbeddingSpec parse(const std::string& text);
  std::string str() const;

  const std::vector<int>& blocks() const { return blocks_; }
  int n() const { return n_; }

  friend bool operator==(const EmbeddingSpec&, const EmbeddingSpec&) = default;

 private:
  std::vector<int> blocks_;
  int n_ = 0;
};

// Weights of the defining representation under the embedding: the multiset
// union over blocks of {n_j - 1, n_j - 3, ..., 1 - n_j}.
std::vector<int> embedding_weights(const EmbeddingSpec& spec);

// Schur polynomial of lambda evaluated at {q^w : w in embedding_weights},
// by the Jacobi-Trudi determinant det(h_{lambda_i - i + j}) over Laurent
// polynomial entries.
LaurentPoly embedding_character(const Partition& lambda, const EmbeddingSpec& spec);

Sl2Decomposition restrict_via_embedding(const Partition& lambda, const EmbeddingSpec& spec);

// Same sweep contract as verify_bound, with the embedding in place of the
// principal sl(2).
BoundReport verify_bound_embedding(const EmbeddingSpec& spec, int max_boxes, int workers = 0);

}  // namespace lowtype

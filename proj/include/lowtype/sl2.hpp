#pragma once

#include <stdexcept>
#include <vector>

#include "lowtype/laurent.hpp"

namespace lowtype {

// The input polynomial is not the character of a finite-dimensional
// sl(2)-representation: either it fails c_k == c_{-k} or the extracted
// multiplicity of some F_j is negative.
class NotACharacter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Multiplicity vector (a_0, a_1, a_2, ...) over the irreducibles F_j,
// trailing zeros trimmed.  The zero representation has an empty vector.
class Sl2Decomposition {
 public:
  Sl2Decomposition() = default;
  explicit Sl2Decomposition(std::vector<BigInt> mults);

  const std::vector<BigInt>& mults() const { return mults_; }
  bool is_zero() const { return mults_.empty(); }
  BigInt mult(int j) const;

  // Least/greatest j with a_j > 0; callers must check is_zero() first.
  int lowest() const;
  int highest() const;

  // Total dimension sum a_j (j+1).
  BigInt dim() const;

  // Recomposition sum a_j chi_j.
  LaurentPoly character() const;

  friend bool operator==(const Sl2Decomposition&, const Sl2Decomposition&) = default;

 private:
  std::vector<BigInt> mults_;
};

// Isotypic multiplicities of a palindromic character: a_j = c_j - c_{j+2}.
// Throws NotACharacter when the input is not palindromic or some a_j < 0.
Sl2Decomposition decompose(const LaurentPoly& character);

// Character of S^m(F_d), the centered Gaussian binomial [m+d choose d]_q.
LaurentPoly sym_power_character(int m, int d);

// Character of Lambda^k(F_d); the zero polynomial when k > d+1.
LaurentPoly ext_power_character(int k, int d);

// l(m,d): least j such that F_j occurs in S^m(F_d).
int lowest_type(int m, int d);

// The closed-form evaluation of l(m,d): explicit branches for
// min(m,d) <= 4 and, for 5 <= m <= d, the exceptional-set rule
// (2 on E, 1 when m and d are both odd, 0 otherwise), extended to all
// pairs by the symmetry l(m,d) = l(d,m).
int lowest_type_closed_form(int m, int d);

// True iff S^m(F_d) and S^d(F_m) have identical characters.
bool hermite_check(int m, int d);

}  // namespace lowtype

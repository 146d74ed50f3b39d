#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "lowtype/bigint.hpp"

namespace lowtype {

// Laurent polynomial in one variable q with exact integer coefficients.
// Sparse exponent -> coefficient map; canonical form never stores a zero
// coefficient, so structural equality is mathematical equality.
//
// Characters of sl(2)-representations are palindromic (c_k == c_{-k});
// that property is asserted by the operations that promise a character,
// not by this type.
class LaurentPoly {
 public:
  using TermMap = std::map<std::int64_t, BigInt>;

  LaurentPoly() = default;

  static LaurentPoly one();
  static LaurentPoly monomial(std::int64_t exponent, BigInt coeff = BigInt(1));

  // Builds from arbitrary terms, merging duplicates and pruning zeros.
  static LaurentPoly from_terms(const std::vector<std::pair<std::int64_t, BigInt>>& terms);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(std::int64_t exponent) const;

  // Extreme exponents; callers must check is_zero() first.
  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;

  bool is_palindromic() const;

  // Sum of all coefficients, i.e. the value at q = 1 (the dimension when
  // this polynomial is a character).
  BigInt eval_at_one() const;

  // Multiplication by q^shift.
  LaurentPoly shifted(std::int64_t shift) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // Human-readable form, ascending exponents, e.g. "q^-2 + 2 + q^2".
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

 private:
  TermMap terms_;
};

// Character of the irreducible sl(2)-representation F_d:
// chi_d = q^-d + q^{-d+2} + ... + q^d.  Rejects d < 0.
LaurentPoly chi(int d);

// Complete homogeneous pieces of the weight multiset: returns
// [h_0, ..., h_m] where h_k is the coefficient of t^k in
// prod_w 1/(1 - t q^w).  One weight is folded in at a time;
// folding w updates h'_k = sum_{i=0..k} h_{k-i} q^{iw}, applied in the
// equivalent telescoped form h'_k = h_k + q^w h'_{k-1}.
std::vector<LaurentPoly> sym_powers_from_weights(const std::vector<int>& weights, int m);

// Elementary pieces: [e_0, ..., e_kmax] with e_k the coefficient of t^k
// in prod_w (1 + t q^w); e_k = 0 for k > |weights|.
std::vector<LaurentPoly> ext_powers_from_weights(const std::vector<int>& weights, int kmax);

}  // namespace lowtype

#include "lowtype/laurent.hpp"

#include <random>

#include <doctest.h>

using namespace lowtype;

namespace {

LaurentPoly q_pow(int e, int c = 1) { return LaurentPoly::monomial(e, BigInt(c)); }

LaurentPoly random_poly(std::mt19937_64& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 7);
  for (int i = 0; i < terms; ++i) {
    const int e = static_cast<int>(rng() % 17) - 8;
    const int c = static_cast<int>(rng() % 19) - 9;
    p += q_pow(e, c);
  }
  return p;
}

}  // namespace

TEST_CASE("addition merges and cancels") {
  CHECK((q_pow(1) + q_pow(-1)) + (q_pow(1) - q_pow(-1)) == q_pow(1, 2));
  const LaurentPoly p = chi(4) + q_pow(-3, 7);
  CHECK(p + LaurentPoly() == p);
  CHECK(chi(1) + chi(1) == q_pow(1, 2) + q_pow(-1, 2));
}

TEST_CASE("multiplication is exact convolution") {
  CHECK(chi(1) * chi(1) == q_pow(2) + q_pow(0, 2) + q_pow(-2));
  const LaurentPoly p = chi(3) + q_pow(5, -2);
  CHECK(p * LaurentPoly::one() == p);
  // Clebsch-Gordan by direct expansion: chi_1 * chi_2 = chi_3 + chi_1.
  CHECK(chi(1) * chi(2) == chi(3) + chi(1));
  CHECK(p * LaurentPoly() == LaurentPoly());
}

TEST_CASE("chi builds irreducible characters") {
  CHECK(chi(0) == LaurentPoly::one());
  CHECK(chi(2) == q_pow(2) + q_pow(0) + q_pow(-2));
  CHECK(chi(3).eval_at_one() == 4);
  CHECK(chi(7).is_palindromic());
  CHECK_THROWS_AS(chi(-1), std::invalid_argument);
}

TEST_CASE("eval_at_one sums coefficients") {
  for (int d = 0; d <= 10; ++d) CHECK(chi(d).eval_at_one() == d + 1);
  CHECK(LaurentPoly().eval_at_one() == 0);
}

TEST_CASE("sym powers from weights") {
  const auto h = sym_powers_from_weights({1, -1}, 2);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == LaurentPoly::one());
  CHECK(h[1] == chi(1));
  CHECK(h[2] == chi(2));

  const auto empty = sym_powers_from_weights({}, 3);
  REQUIRE(empty.size() == 4);
  CHECK(empty[0] == LaurentPoly::one());
  for (int k = 1; k <= 3; ++k) CHECK(empty[static_cast<std::size_t>(k)].is_zero());

  CHECK(sym_powers_from_weights({0, 0}, 1)[1] == q_pow(0, 2));
}

TEST_CASE("ext powers from weights") {
  CHECK(ext_powers_from_weights({2, 0, -2}, 3)[3] == LaurentPoly::one());
  CHECK(ext_powers_from_weights({1, -1}, 1)[1] == chi(1));
  const auto e = ext_powers_from_weights({3, 1, -1, -3}, 4);
  CHECK(e[2] == q_pow(4) + q_pow(2) + q_pow(0, 2) + q_pow(-2) + q_pow(-4));
  CHECK(e[2] == chi(4) + chi(0));
  // Beyond the number of weights everything vanishes.
  CHECK(ext_powers_from_weights({1, -1}, 5)[4].is_zero());
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
    CHECK((a + b).eval_at_one() == a.eval_at_one() + b.eval_at_one());
  }
}

TEST_CASE("symmetric weight multisets give palindromic pieces") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> weights;
    const int half = static_cast<int>(rng() % 4);
    for (int i = 0; i < half; ++i) {
      const int w = static_cast<int>(rng() % 5) + 1;
      weights.push_back(w);
      weights.push_back(-w);
    }
    if (rng() % 2 == 0) weights.push_back(0);
    const int m = 1 + static_cast<int>(rng() % 5);
    const auto h = sym_powers_from_weights(weights, m);
    const auto e = ext_powers_from_weights(weights, m);
    BigInt ext_total = 0;
    for (const auto& piece : h) CHECK(piece.is_palindromic());
    for (const auto& piece : e) CHECK(piece.is_palindromic());
    // Counting checks: h_m picks multisets, the e_k sum over all k picks subsets.
    const long long nw = static_cast<long long>(weights.size());
    CHECK(h[static_cast<std::size_t>(m)].eval_at_one() == binomial(nw + m - 1, m));
    const auto e_all = ext_powers_from_weights(weights, static_cast<int>(weights.size()));
    for (const auto& piece : e_all) ext_total += piece.eval_at_one();
    CHECK(ext_total == BigInt(1) << weights.size());
  }
}

TEST_CASE("string form") {
  CHECK(LaurentPoly().str() == "0");
  CHECK(chi(2).str() == "q^-2 + 1 + q^2");
  CHECK((q_pow(1, -3) + q_pow(0, 5)).str() == "5 - 3*q");
}

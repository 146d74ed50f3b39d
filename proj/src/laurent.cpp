#include "lowtype/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lowtype {

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is always an integer binomial prefix
  }
  return result;
}

LaurentPoly LaurentPoly::one() { return monomial(0); }

LaurentPoly LaurentPoly::monomial(std::int64_t exponent, BigInt coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exponent] = std::move(coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<std::int64_t, BigInt>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    auto [it, fresh] = p.terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) p.terms_.erase(it);
    }
  }
  return p;
}

BigInt LaurentPoly::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::int64_t LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::is_palindromic() const {
  for (const auto& [e, c] : terms_) {
    if (coeff(-e) != c) return false;
  }
  return true;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentPoly LaurentPoly::shifted(std::int64_t shift) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + shift, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, fresh] = terms_.try_emplace(e, BigInt(-c));
    if (!fresh) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs += rhs;
  return lhs;
}

LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return LaurentPoly();
  // Dense convolution over the joint exponent window.
  const std::int64_t lo = lhs.min_exponent() + rhs.min_exponent();
  const std::int64_t hi = lhs.max_exponent() + rhs.max_exponent();
  std::vector<BigInt> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    }
  }
  LaurentPoly out;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) out.terms_.emplace(lo + static_cast<std::int64_t>(i), std::move(acc[i]));
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly chi(int d) {
  if (d < 0) throw std::invalid_argument("chi: negative highest weight");
  LaurentPoly p;
  std::vector<std::pair<std::int64_t, BigInt>> terms;
  terms.reserve(d + 1);
  for (int i = 0; i <= d; ++i) terms.emplace_back(d - 2 * i, 1);
  return LaurentPoly::from_terms(terms);
}

namespace {

// Shared machinery for the generating-function DPs.  The k-th slot is held
// densely over the exponent window [k*min_w, k*max_w].  When every weight has
// the same parity the DP runs on halved exponents (the support of slot k then
// lives on the single residue class k*parity mod 2), which halves the windows.
struct WeightDp {
  std::vector<int> work;  // possibly halved weights
  int parity = 0;         // 0 or 1; exponent of slot k is 2*u + k*parity
  bool halved = false;
  int min_w = 0;
  int max_w = 0;

  explicit WeightDp(const std::vector<int>& weights) {
    work = weights;
    if (!work.empty()) {
      parity = ((work.front() % 2) + 2) % 2;
      halved = std::all_of(work.begin(), work.end(),
                           [&](int w) { return ((w % 2) + 2) % 2 == parity; });
      if (halved) {
        for (int& w : work) w = (w - parity) / 2;
      } else {
        parity = 0;
      }
      auto [lo, hi] = std::minmax_element(work.begin(), work.end());
      min_w = std::min(0, *lo);
      max_w = std::max(0, *hi);
    }
  }

  std::size_t width(int k) const {
    return static_cast<std::size_t>(static_cast<std::int64_t>(k) * (max_w - min_w) + 1);
  }

  // Translate slot-k dense index u back to the exponent of q.
  std::int64_t exponent(int k, std::size_t u) const {
    std::int64_t e = static_cast<std::int64_t>(k) * min_w + static_cast<std::int64_t>(u);
    return halved ? 2 * e + static_cast<std::int64_t>(k) * parity : e;
  }

  LaurentPoly sparsify(int k, const std::vector<BigInt>& dense) const {
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    for (std::size_t u = 0; u < dense.size(); ++u) {
      if (dense[u] != 0) terms.emplace_back(exponent(k, u), dense[u]);
    }
    return LaurentPoly::from_terms(terms);
  }
};

}  // namespace

std::vector<LaurentPoly> sym_powers_from_weights(const std::vector<int>& weights, int m) {
  if (m < 0) throw std::invalid_argument("sym_powers_from_weights: negative order");
  WeightDp dp(weights);
  std::vector<std::vector<BigInt>> h(m + 1);
  for (int k = 0; k <= m; ++k) h[k].assign(dp.width(k), BigInt(0));
  h[0][0] = 1;
  for (int w : dp.work) {
    // h'_k = h_k + q^w h'_{k-1}: ascending k so slot k-1 is already updated.
    const std::size_t off = static_cast<std::size_t>(w - dp.min_w);
    for (int k = 1; k <= m; ++k) {
      const auto& prev = h[k - 1];
      auto& cur = h[k];
      for (std::size_t u = 0; u < prev.size(); ++u) {
        if (prev[u] != 0) cur[u + off] += prev[u];
      }
    }
  }
  std::vector<LaurentPoly> out(m + 1);
  for (int k = 0; k <= m; ++k) out[k] = dp.sparsify(k, h[k]);
  return out;
}

std::vector<LaurentPoly> ext_powers_from_weights(const std::vector<int>& weights, int kmax) {
  if (kmax < 0) throw std::invalid_argument("ext_powers_from_weights: negative order");
  WeightDp dp(weights);
  std::vector<std::vector<BigInt>> e(kmax + 1);
  for (int k = 0; k <= kmax; ++k) e[k].assign(dp.width(k), BigInt(0));
  e[0][0] = 1;
  int used = 0;
  for (int w : dp.work) {
    ++used;
    // e'_k = e_k + q^w e_{k-1}: descending k so slot k-1 still holds the old value.
    const std::size_t off = static_cast<std::size_t>(w - dp.min_w);
    for (int k = std::min(kmax, used); k >= 1; --k) {
      const auto& prev = e[k - 1];
      auto& cur = e[k];
      for (std::size_t u = 0; u < prev.size(); ++u) {
        if (prev[u] != 0) cur[u + off] += prev[u];
      }
    }
  }
  std::vector<LaurentPoly> out(kmax + 1);
  for (int k = 0; k <= kmax; ++k) out[k] = dp.sparsify(k, e[k]);
  return out;
}

}  // namespace lowtype

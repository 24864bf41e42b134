#include "qmaj/qpoly.hpp"

#include <stdexcept>
#include <string>

namespace qmaj {

QPoly::Coeff checked_add(QPoly::Coeff a, QPoly::Coeff b) {
  QPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("QPoly: 64-bit coefficient overflow in addition (" +
                              std::to_string(a) + " + " + std::to_string(b) + ")");
  }
  return r;
}

QPoly::Coeff checked_mul(QPoly::Coeff a, QPoly::Coeff b) {
  QPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("QPoly: 64-bit coefficient overflow in multiplication (" +
                              std::to_string(a) + " * " + std::to_string(b) + ")");
  }
  return r;
}

QPoly::QPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::monomial(int degree, Coeff c) {
  if (degree < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  if (c == 0) return QPoly{};
  std::vector<Coeff> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return QPoly(std::move(v));
}

std::optional<int> QPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

QPoly::Coeff QPoly::coeff(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

QPoly::Coeff QPoly::eval_at_one() const {
  Coeff s = 0;
  for (Coeff c : coeffs_) s = checked_add(s, c);
  return s;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("QPoly::shifted: negative shift");
  if (is_zero() || k == 0) return *this;
  std::vector<Coeff> v(static_cast<std::size_t>(k), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] = checked_add(coeffs_[i], rhs.coeffs_[i]);
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] = checked_add(coeffs_[i], checked_mul(rhs.coeffs_[i], -1));
  normalize();
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return QPoly{};
  std::vector<QPoly::Coeff> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(lhs.coeffs_[i], rhs.coeffs_[j]));
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r;
  r -= *this;
  return r;
}

QPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: n must be nonnegative");
  return QPoly(std::vector<QPoly::Coeff>(static_cast<std::size_t>(n), 1));
}

QPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be nonnegative");
  QPoly r = QPoly::one();
  for (int j = 1; j <= n; ++j) r *= q_int(j);
  return r;
}

QPoly q_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("q_binomial: n must be nonnegative");
  if (k < 0 || k > n) return QPoly{};
  // Row of the q-Pascal triangle, truncated at column k.
  std::vector<QPoly> row(static_cast<std::size_t>(k) + 1);
  row[0] = QPoly::one();
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[j] = row[j - 1] + row[j].shifted(j);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

QPoly q_derangement_formula(int n) {
  if (n < 0) throw std::invalid_argument("q_derangement_formula: n must be nonnegative");
  QPoly acc;
  QPoly suffix_product = QPoly::one();  // [k+1][k+2]...[n], starting at k = n
  for (int k = n; k >= 0; --k) {
    QPoly term = suffix_product.shifted(k * (k - 1) / 2);
    if (k % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
    if (k > 0) suffix_product *= q_int(k);
  }
  return acc;
}

QPoly q_derangement_recurrence(int n) {
  if (n < 0) throw std::invalid_argument("q_derangement_recurrence: n must be nonnegative");
  std::vector<QPoly> d(static_cast<std::size_t>(n) + 1);
  d[0] = QPoly::one();
  for (int m = 1; m <= n; ++m) {
    QPoly r = q_factorial(m);
    for (int k = 0; k < m; ++k) r -= q_binomial(m, k) * d[static_cast<std::size_t>(k)];
    d[static_cast<std::size_t>(m)] = std::move(r);
  }
  return d[static_cast<std::size_t>(n)];
}

// q_derangement_bruteforce lives in kernels.cpp next to the enumeration
// machinery it relies on.

}  // namespace qmaj

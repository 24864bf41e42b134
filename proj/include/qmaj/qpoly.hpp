#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qmaj {

/* Dense polynomial over the integers in one variable q.
 *
 * Coefficients are stored in ascending degree order and kept normalized:
 * a nonempty coefficient vector never ends in zero, and the zero
 * polynomial is the empty vector (its degree() is nullopt).
 *
 * All arithmetic is exact.  Coefficient overflow of the 64-bit integer
 * type is detected and reported via std::overflow_error, never wrapped.
 */
class QPoly {
 public:
  using Coeff = std::int64_t;

  QPoly() = default;  // zero polynomial
  explicit QPoly(std::vector<Coeff> coeffs);

  static QPoly one() { return QPoly({1}); }
  static QPoly monomial(int degree, Coeff c = 1);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;
  Coeff coeff(int i) const;
  const std::vector<Coeff>& coeffs() const { return coeffs_; }

  /* Value at q = 1, i.e. the sum of coefficients (checked). */
  Coeff eval_at_one() const;

  /* Multiply by q^k. */
  QPoly shifted(int k) const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);
  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  QPoly operator-() const;

  bool operator==(const QPoly&) const = default;

 private:
  void normalize();

  std::vector<Coeff> coeffs_;
};

/* Checked 64-bit arithmetic used for every coefficient operation. */
QPoly::Coeff checked_add(QPoly::Coeff a, QPoly::Coeff b);
QPoly::Coeff checked_mul(QPoly::Coeff a, QPoly::Coeff b);

/* q-integer [n] = 1 + q + ... + q^{n-1}; [0] is the zero polynomial. */
QPoly q_int(int n);

/* q-factorial [n]! = [1][2]...[n]; [0]! = 1.  Degree n(n-1)/2. */
QPoly q_factorial(int n);

/* Gaussian binomial coefficient [n k].  Zero when k < 0 or k > n.
 * Computed division-free via the Pascal recurrence
 *   [n k] = [n-1 k-1] + q^k [n-1 k],   [0 0] = 1. */
QPoly q_binomial(int n, int k);

/* q-derangement number d_n(q), three independent routes. */

/* Closed form: d_n = sum_{k=0..n} (-1)^k q^{C(k,2)} [n]!/[k]!, where
 * [n]!/[k]! is materialized as the partial product [k+1][k+2]...[n], so
 * every summand is a polynomial. */
QPoly q_derangement_formula(int n);

/* Inversion of [n]! = sum_k [n k] d_k(q), by dynamic programming:
 * d_n = [n]! - sum_{k<n} [n k] d_k. */
QPoly q_derangement_recurrence(int n);

/* Exhaustive sum of q^maj over all derangements of size n.  Refuses n
 * beyond the enumeration guard. */
QPoly q_derangement_bruteforce(int n, int guard);
QPoly q_derangement_bruteforce(int n);

}  // namespace qmaj

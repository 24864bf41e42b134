#pragma once

#include <span>
#include <string>
#include <vector>

namespace qmaj {

/* Permutation of {1, ..., n} in one-line notation.  Positions and values
 * are 1-indexed at the public surface; the empty permutation (n = 0) is
 * valid. */
class Permutation {
 public:
  Permutation() = default;

  /* Validates that `one_line` is a bijection on {1..n}; the diagnostic
   * names the duplicate or missing value. */
  static Permutation from_one_line(std::vector<int> one_line);

  /* No validation; for callers that construct known-valid values. */
  static Permutation unchecked(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  /* pi_i, 1-indexed. */
  int value(int i) const { return values_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/* Descent positions { i in [1, n-1] : pi_i > pi_{i+1} }, increasing. */
std::vector<int> descent_set(const Permutation& p);

/* maj(pi): sum of the descent positions. */
int major_index(const Permutation& p);

/* Positions with pi_i = i, increasing. */
std::vector<int> fixed_points(const Permutation& p);

/* Positions with pi_i != i, increasing. */
std::vector<int> derangement_points(const Permutation& p);

bool is_derangement(const Permutation& p);

/* dp(pi): the permutation induced by the relative order of the values at
 * the derangement points.  Always a derangement; empty for the identity. */
Permutation dp_reduce(const Permutation& p);

/* Insert j as a fixed point into a permutation of size k (1 <= j <= k+1):
 * values >= j are incremented, then value j is placed at position j.
 * Adds exactly one fixed point and leaves dp(pi) unchanged. */
Permutation insert_fixed_point(const Permutation& p, int j);

/* phi_i = number of descents of pi_i pi_{i+1} ... pi_n, for i = 1..n.
 * Weakly decreasing with steps 0 or 1; sums to maj(pi). */
std::vector<int> suffix_descent_counts(const Permutation& p);

namespace detail {

/* Raw-span variants used by the enumeration kernels. */
int major_index(std::span<const int> values);
int first_fixed_point(std::span<const int> values);  // 0-based index, -1 if none
bool is_derangement(std::span<const int> values);
std::vector<int> dp_reduce(std::span<const int> values);
std::vector<int> insert_fixed_point(std::span<const int> values, int j);

}  // namespace detail

}  // namespace qmaj

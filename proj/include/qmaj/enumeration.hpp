#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qmaj/errors.hpp"
#include "qmaj/permutation.hpp"

namespace qmaj {

/* Batch enumeration over S_n is refused beyond this bound unless the
 * caller raises it explicitly; 12! is the practical ceiling for a
 * desk-scale exhaustive run. */
inline constexpr int kDefaultEnumerationGuard = 12;

void check_enumeration_guard(int n, int guard, const char* what = "n");

/* n! as uint64; requires 0 <= n <= 20. */
std::uint64_t factorial_u64(int n);

/* Permutation of {1..n} with the given lexicographic rank in [0, n!). */
std::vector<int> unrank_permutation(int n, std::uint64_t rank);

/* Inverse of unrank_permutation (Lehmer code). */
std::uint64_t permutation_lex_rank(std::span<const int> values);

/* Visit the permutations whose lexicographic ranks lie in [lo, hi). */
template <typename Fn>
void for_each_permutation_in_rank_range(int n, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  if (lo >= hi) return;
  std::vector<int> current = unrank_permutation(n, lo);
  for (std::uint64_t count = hi - lo; count > 0; --count) {
    fn(static_cast<const std::vector<int>&>(current));
    std::next_permutation(current.begin(), current.end());
  }
}

/* Split [0, total) into `blocks` contiguous near-equal ranges. */
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_rank_blocks(std::uint64_t total,
                                                                       int blocks);

/* Streams all n! permutations of {1..n} in lexicographic order. */
class PermutationRange {
 public:
  explicit PermutationRange(int n, int guard = kDefaultEnumerationGuard);

  struct end_sentinel {};

  class iterator {
   public:
    explicit iterator(int n);

    Permutation operator*() const { return Permutation::unchecked(current_); }
    const std::vector<int>& raw() const { return current_; }
    iterator& operator++();
    friend bool operator==(const iterator& it, end_sentinel) { return it.done_; }
    friend bool operator!=(const iterator& it, end_sentinel s) { return !(it == s); }

   private:
    std::vector<int> current_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(n_); }
  end_sentinel end() const { return {}; }

 private:
  int n_;
};

/* Streams the derangements of {1..n} in lexicographic order.  Prefixes
 * that pin a fixed point are skipped wholesale, so the cost is
 * proportional to the output, not to n!. */
class DerangementRange {
 public:
  explicit DerangementRange(int n, int guard = kDefaultEnumerationGuard);

  struct end_sentinel {};

  class iterator {
   public:
    explicit iterator(int n);

    Permutation operator*() const { return Permutation::unchecked(current_); }
    const std::vector<int>& raw() const { return current_; }
    iterator& operator++();
    friend bool operator==(const iterator& it, end_sentinel) { return it.done_; }
    friend bool operator!=(const iterator& it, end_sentinel s) { return !(it == s); }

   private:
    void settle();  // advance current_ to the next derangement, if any

    std::vector<int> current_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(n_); }
  end_sentinel end() const { return {}; }

 private:
  int n_;
};

}  // namespace qmaj

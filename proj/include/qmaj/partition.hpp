#pragma once

#include <vector>

namespace qmaj {

/* Integer partition with an explicit declared length: a weakly decreasing
 * sequence of nonnegative parts.  Trailing zeros are permitted and
 * meaningful ("at most n parts"), so (5,4,0) and (5,4) are distinct
 * values. */
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition unchecked(std::vector<int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  /* lambda_i, 1-indexed. */
  int part(int i) const { return parts_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& parts() const { return parts_; }

  /* |lambda| = sum of the parts. */
  long long sum() const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/* Streams every weakly decreasing sequence of `length` nonnegative
 * integers with the given sum, each exactly once, in decreasing
 * lexicographic order starting from (total, 0, ..., 0). */
class PartitionSumRange {
 public:
  PartitionSumRange(int length, int total);

  struct end_sentinel {};

  class iterator {
   public:
    iterator(int length, int total);

    Partition operator*() const { return Partition::unchecked(current_); }
    iterator& operator++();
    friend bool operator==(const iterator& it, end_sentinel) { return it.done_; }
    friend bool operator!=(const iterator& it, end_sentinel s) { return !(it == s); }

   private:
    std::vector<int> current_;
    bool done_ = false;
  };

  iterator begin() const { return iterator(length_, total_); }
  end_sentinel end() const { return {}; }

 private:
  int length_;
  int total_;
};

}  // namespace qmaj

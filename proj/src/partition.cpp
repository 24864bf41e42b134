#include "qmaj/partition.hpp"

#include <stdexcept>
#include <string>

namespace qmaj {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition: part " + std::to_string(i + 1) +
                                  " is negative (" + std::to_string(parts_[i]) + ")");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition: parts not weakly decreasing at positions " +
                                  std::to_string(i + 1) + "," + std::to_string(i + 2));
    }
  }
}

Partition Partition::unchecked(std::vector<int> parts) {
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

long long Partition::sum() const {
  long long s = 0;
  for (int v : parts_) s += v;
  return s;
}

PartitionSumRange::PartitionSumRange(int length, int total) : length_(length), total_(total) {
  if (length < 0) throw std::invalid_argument("PartitionSumRange: negative length");
  if (total < 0) throw std::invalid_argument("PartitionSumRange: negative total");
}

PartitionSumRange::iterator::iterator(int length, int total) {
  if (length == 0) {
    done_ = total != 0;  // the empty partition is the sole partition of 0
    return;
  }
  current_.assign(static_cast<std::size_t>(length), 0);
  current_[0] = total;
}

PartitionSumRange::iterator& PartitionSumRange::iterator::operator++() {
  const int n = static_cast<int>(current_.size());
  if (n == 0) {
    done_ = true;
    return *this;
  }
  // Successor in decreasing lexicographic order: find the rightmost
  // position j whose part can drop by one while the suffix total still
  // fits under the new cap, then refill the suffix greedily.
  long long tail = 0;
  for (int j = n - 1; j >= 0; --j) {
    tail += current_[static_cast<std::size_t>(j)];
    const int cap = current_[static_cast<std::size_t>(j)] - 1;
    if (cap < 0) continue;
    if (static_cast<long long>(cap) * (n - j) < tail) continue;
    long long rem = tail;
    for (int i = j; i < n; ++i) {
      const int v = static_cast<int>(std::min<long long>(cap, rem));
      current_[static_cast<std::size_t>(i)] = v;
      rem -= v;
    }
    return *this;
  }
  done_ = true;
  return *this;
}

}  // namespace qmaj

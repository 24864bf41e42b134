#include "qmaj/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmaj {

void check_enumeration_guard(int n, int guard, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative, got " +
                                std::to_string(n));
  }
  if (n > guard) {
    throw GuardError("enumeration guard exceeded: " + std::string(what) + " = " +
                         std::to_string(n) + " > " + std::to_string(guard),
                     n, guard);
  }
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial_u64: n outside [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
  if (rank >= factorial_u64(n)) {
    throw std::out_of_range("unrank_permutation: rank " + std::to_string(rank) +
                            " >= " + std::to_string(n) + "!");
  }
  std::vector<int> avail(static_cast<std::size_t>(n));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const std::uint64_t f = factorial_u64(i - 1);
    const std::uint64_t d = rank / f;
    rank %= f;
    out.push_back(avail[static_cast<std::size_t>(d)]);
    avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return out;
}

std::uint64_t permutation_lex_rank(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) {
      if (values[static_cast<std::size_t>(j)] < values[static_cast<std::size_t>(i)]) ++smaller;
    }
    rank += static_cast<std::uint64_t>(smaller) * factorial_u64(n - 1 - i);
  }
  return rank;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> split_rank_blocks(std::uint64_t total,
                                                                       int blocks) {
  if (blocks < 1) blocks = 1;
  const std::uint64_t b = std::min<std::uint64_t>(static_cast<std::uint64_t>(blocks),
                                                  std::max<std::uint64_t>(total, 1));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  out.reserve(static_cast<std::size_t>(b));
  for (std::uint64_t i = 0; i < b; ++i) {
    const std::uint64_t lo = total / b * i + std::min(i, total % b);
    const std::uint64_t hi = total / b * (i + 1) + std::min(i + 1, total % b);
    out.emplace_back(lo, hi);
  }
  return out;
}

PermutationRange::PermutationRange(int n, int guard) : n_(n) {
  check_enumeration_guard(n, guard);
}

PermutationRange::iterator::iterator(int n) {
  current_.resize(static_cast<std::size_t>(n));
  std::iota(current_.begin(), current_.end(), 1);
}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  if (!std::next_permutation(current_.begin(), current_.end())) done_ = true;
  return *this;
}

DerangementRange::DerangementRange(int n, int guard) : n_(n) {
  check_enumeration_guard(n, guard);
}

DerangementRange::iterator::iterator(int n) {
  current_.resize(static_cast<std::size_t>(n));
  std::iota(current_.begin(), current_.end(), 1);
  settle();
}

void DerangementRange::iterator::settle() {
  while (!done_) {
    const int p = detail::first_fixed_point(current_);
    if (p < 0) return;
    // Every permutation sharing the prefix up to the fixed point keeps
    // that fixed point; jump to the last of them and step once.
    std::sort(current_.begin() + p + 1, current_.end(), std::greater<int>());
    if (!std::next_permutation(current_.begin(), current_.end())) done_ = true;
  }
}

DerangementRange::iterator& DerangementRange::iterator::operator++() {
  if (!std::next_permutation(current_.begin(), current_.end())) {
    done_ = true;
    return *this;
  }
  settle();
  return *this;
}

}  // namespace qmaj

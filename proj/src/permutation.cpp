#include "qmaj/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qmaj {

Permutation Permutation::from_one_line(std::vector<int> one_line) {
  const int n = static_cast<int>(one_line.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : one_line) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation of size " + std::to_string(n) +
                                  ": value " + std::to_string(v) + " out of range");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                  " appears more than once");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int v = 1; v <= n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("permutation: value " + std::to_string(v) + " is missing");
    }
  }
  return unchecked(std::move(one_line));
}

Permutation Permutation::unchecked(std::vector<int> one_line) {
  Permutation p;
  p.values_ = std::move(one_line);
  return p;
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return unchecked(std::move(v));
}

namespace detail {

int major_index(std::span<const int> values) {
  int maj = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] > values[i + 1]) maj += static_cast<int>(i) + 1;
  }
  return maj;
}

int first_fixed_point(std::span<const int> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == static_cast<int>(i) + 1) return static_cast<int>(i);
  }
  return -1;
}

bool is_derangement(std::span<const int> values) { return first_fixed_point(values) < 0; }

std::vector<int> dp_reduce(std::span<const int> values) {
  std::vector<int> vals;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] != static_cast<int>(i) + 1) vals.push_back(values[i]);
  }
  std::vector<int> sorted = vals;
  std::sort(sorted.begin(), sorted.end());
  for (int& v : vals) {
    v = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin()) + 1;
  }
  return vals;
}

std::vector<int> insert_fixed_point(std::span<const int> values, int j) {
  const int k = static_cast<int>(values.size());
  if (j < 1 || j > k + 1) {
    throw std::out_of_range("insert_fixed_point: j = " + std::to_string(j) +
                            " outside [1, " + std::to_string(k + 1) + "]");
  }
  std::vector<int> out;
  out.reserve(values.size() + 1);
  for (int v : values) out.push_back(v < j ? v : v + 1);
  out.insert(out.begin() + (j - 1), j);
  return out;
}

}  // namespace detail

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> d;
  const auto& v = p.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) d.push_back(static_cast<int>(i) + 1);
  }
  return d;
}

int major_index(const Permutation& p) { return detail::major_index(p.values()); }

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> f;
  const auto& v = p.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == static_cast<int>(i) + 1) f.push_back(static_cast<int>(i) + 1);
  }
  return f;
}

std::vector<int> derangement_points(const Permutation& p) {
  std::vector<int> d;
  const auto& v = p.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != static_cast<int>(i) + 1) d.push_back(static_cast<int>(i) + 1);
  }
  return d;
}

bool is_derangement(const Permutation& p) { return detail::is_derangement(p.values()); }

Permutation dp_reduce(const Permutation& p) {
  return Permutation::unchecked(detail::dp_reduce(p.values()));
}

Permutation insert_fixed_point(const Permutation& p, int j) {
  return Permutation::unchecked(detail::insert_fixed_point(p.values(), j));
}

std::vector<int> suffix_descent_counts(const Permutation& p) {
  const auto& v = p.values();
  const int n = p.size();
  std::vector<int> phi(static_cast<std::size_t>(n), 0);
  for (int i = n - 1; i >= 1; --i) {  // position i, 1-indexed
    int here = v[static_cast<std::size_t>(i) - 1] > v[static_cast<std::size_t>(i)] ? 1 : 0;
    phi[static_cast<std::size_t>(i) - 1] = phi[static_cast<std::size_t>(i)] + here;
  }
  return phi;
}

}  // namespace qmaj

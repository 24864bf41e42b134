#include "qmaj/kernels.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmaj {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
#ifdef _OPENMP
  return std::max(1, omp_get_max_threads());
#else
  return std::max(1u, std::thread::hardware_concurrency());
#endif
}

namespace {

constexpr int kBlocksPerThread = 4;

/* Deterministic block split of [0, n!) for a given worker count. */
std::vector<std::pair<std::uint64_t, std::uint64_t>> plan_blocks(int n, int threads) {
  const std::uint64_t total = factorial_u64(n);
  const std::uint64_t want = static_cast<std::uint64_t>(threads) * kBlocksPerThread;
  const int blocks = static_cast<int>(
      std::max<std::uint64_t>(1, std::min(want, std::max<std::uint64_t>(total, 1))));
  return split_rank_blocks(total, blocks);
}

void rethrow_first(std::vector<std::exception_ptr>& errors) {
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

QPoly histogram_to_poly(const std::vector<long long>& hist) {
  std::vector<QPoly::Coeff> coeffs(hist.begin(), hist.end());
  return QPoly(std::move(coeffs));
}

/* Shared skeleton: run `body(block, lo, hi)` over the given block split
 * with OpenMP, reporting progress per finished block. */
template <typename Body>
void run_blocks(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& ranges, int threads,
                const ProgressFn& progress, const char* label, Body&& body) {
  std::vector<std::exception_ptr> errors(ranges.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int b = 0; b < static_cast<int>(ranges.size()); ++b) {
    try {
      body(b, ranges[static_cast<std::size_t>(b)].first, ranges[static_cast<std::size_t>(b)].second);
      if (progress) {
        std::string line = std::string(label) + ": block " + std::to_string(b + 1) + "/" +
                           std::to_string(ranges.size()) + " done (" +
                           std::to_string(ranges[static_cast<std::size_t>(b)].second -
                                          ranges[static_cast<std::size_t>(b)].first) +
                           " permutations)";
#ifdef _OPENMP
#pragma omp critical(qmaj_progress)
#endif
        progress(line);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(b)] = std::current_exception();
    }
  }
  rethrow_first(errors);
}

}  // namespace

QPoly maj_distribution_serial(int n) {
  const int max_maj = n * (n - 1) / 2;
  std::vector<long long> hist(static_cast<std::size_t>(max_maj) + 1, 0);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    ++hist[static_cast<std::size_t>(detail::major_index(p))];
  } while (std::next_permutation(p.begin(), p.end()));
  return histogram_to_poly(hist);
}

QPoly maj_distribution_parallel(int n, int threads, const ProgressFn& progress) {
  threads = resolve_threads(threads);
  const int max_maj = n * (n - 1) / 2;
  const auto ranges = plan_blocks(n, threads);
  std::vector<std::vector<long long>> partial(
      ranges.size(), std::vector<long long>(static_cast<std::size_t>(max_maj) + 1, 0));

  run_blocks(ranges, threads, progress, "maj", [&](int b, std::uint64_t lo, std::uint64_t hi) {
    auto& h = partial[static_cast<std::size_t>(b)];
    for_each_permutation_in_rank_range(n, lo, hi, [&](const std::vector<int>& p) {
      ++h[static_cast<std::size_t>(detail::major_index(p))];
    });
  });

  std::vector<long long> hist(static_cast<std::size_t>(max_maj) + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i < h.size(); ++i) hist[i] += h[i];
  }
  return histogram_to_poly(hist);
}

QPoly derangement_maj_distribution_serial(int n) {
  const int max_maj = n * (n - 1) / 2;
  std::vector<long long> hist(static_cast<std::size_t>(max_maj) + 1, 0);
  for (auto it = DerangementRange(n, n).begin(); it != DerangementRange::end_sentinel{}; ++it) {
    ++hist[static_cast<std::size_t>(detail::major_index(it.raw()))];
  }
  return histogram_to_poly(hist);
}

QPoly derangement_maj_distribution_parallel(int n, int threads, const ProgressFn& progress) {
  threads = resolve_threads(threads);
  const int max_maj = n * (n - 1) / 2;
  const auto ranges = plan_blocks(n, threads);
  std::vector<std::vector<long long>> partial(
      ranges.size(), std::vector<long long>(static_cast<std::size_t>(max_maj) + 1, 0));

  run_blocks(ranges, threads, progress, "dmaj",
             [&](int b, std::uint64_t lo, std::uint64_t hi) {
    auto& h = partial[static_cast<std::size_t>(b)];
    for_each_permutation_in_rank_range(n, lo, hi, [&](const std::vector<int>& p) {
      if (detail::is_derangement(p)) ++h[static_cast<std::size_t>(detail::major_index(p))];
    });
  });

  std::vector<long long> hist(static_cast<std::size_t>(max_maj) + 1, 0);
  for (const auto& h : partial) {
    for (std::size_t i = 0; i < h.size(); ++i) hist[i] += h[i];
  }
  return histogram_to_poly(hist);
}

namespace {

using RawBuckets = std::map<std::vector<int>, std::pair<std::vector<long long>, std::uint64_t>>;

void bucket_accumulate(RawBuckets& buckets, int max_maj, const std::vector<int>& p) {
  auto key = detail::dp_reduce(p);
  auto [it, inserted] = buckets.try_emplace(std::move(key));
  if (inserted) it->second.first.assign(static_cast<std::size_t>(max_maj) + 1, 0);
  ++it->second.first[static_cast<std::size_t>(detail::major_index(p))];
  ++it->second.second;
}

DpBucketMap finalize_buckets(const RawBuckets& raw) {
  DpBucketMap out;
  for (const auto& [key, value] : raw) {
    out.emplace(key, DpBucket{histogram_to_poly(value.first), value.second});
  }
  return out;
}

}  // namespace

DpBucketMap dp_buckets_serial(int n) {
  const int max_maj = n * (n - 1) / 2;
  RawBuckets buckets;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    bucket_accumulate(buckets, max_maj, p);
  } while (std::next_permutation(p.begin(), p.end()));
  return finalize_buckets(buckets);
}

DpBucketMap dp_buckets_parallel(int n, int threads, const ProgressFn& progress) {
  threads = resolve_threads(threads);
  const int max_maj = n * (n - 1) / 2;
  const auto ranges = plan_blocks(n, threads);
  std::vector<RawBuckets> partial(ranges.size());

  run_blocks(ranges, threads, progress, "dp-buckets",
             [&](int b, std::uint64_t lo, std::uint64_t hi) {
               auto& local = partial[static_cast<std::size_t>(b)];
               for_each_permutation_in_rank_range(n, lo, hi, [&](const std::vector<int>& p) {
                 bucket_accumulate(local, max_maj, p);
               });
             });

  RawBuckets merged;
  for (auto& local : partial) {
    for (auto& [key, value] : local) {
      auto [it, inserted] = merged.try_emplace(key);
      if (inserted) {
        it->second = std::move(value);
      } else {
        for (std::size_t i = 0; i < value.first.size(); ++i) it->second.first[i] += value.first[i];
        it->second.second += value.second;
      }
    }
  }
  return finalize_buckets(merged);
}

QPoly q_derangement_bruteforce(int n, int guard) {
  check_enumeration_guard(n, guard);
  return derangement_maj_distribution_serial(n);
}

QPoly q_derangement_bruteforce(int n) {
  return q_derangement_bruteforce(n, kDefaultEnumerationGuard);
}

}  // namespace qmaj

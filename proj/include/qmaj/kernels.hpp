#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qmaj/enumeration.hpp"
#include "qmaj/qpoly.hpp"

namespace qmaj {

/* Sink for human-readable progress lines ("block 3/8 done").  Never part
 * of a result; callers typically wire it to stderr. */
using ProgressFn = std::function<void(const std::string&)>;

/* Resolve a thread-count request: values <= 0 mean "all available". */
int resolve_threads(int threads);

/* Enumeration kernels over S_n.  Each comes in two flavors:
 *   *_serial    straight next_permutation sweep, the reference
 *   *_parallel  lexicographic rank range split into blocks, processed
 *               with OpenMP, merged in block order
 * Both produce exactly equal results; the parallel flavor exists for
 * speed and the serial one is kept as the test oracle (see the
 * benchmark tool for a side-by-side).  Callers enforce the enumeration
 * guard. */

/* Sum of q^maj over all of S_n. */
QPoly maj_distribution_serial(int n);
QPoly maj_distribution_parallel(int n, int threads, const ProgressFn& progress = {});

/* Sum of q^maj over the derangements of S_n. */
QPoly derangement_maj_distribution_serial(int n);
QPoly derangement_maj_distribution_parallel(int n, int threads, const ProgressFn& progress = {});

/* One bucket per derangement part: dp(pi) -> (sum of q^maj, count). */
struct DpBucket {
  QPoly maj_sum;
  std::uint64_t count = 0;

  bool operator==(const DpBucket&) const = default;
};
using DpBucketMap = std::map<std::vector<int>, DpBucket>;

DpBucketMap dp_buckets_serial(int n);
DpBucketMap dp_buckets_parallel(int n, int threads, const ProgressFn& progress = {});

}  // namespace qmaj

#include "qmaj/verify.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <random>
#include <set>

#include "qmaj/json_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qmaj {

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::Eq1: return "eq1";
    case IdentityId::Eq2: return "eq2";
    case IdentityId::Eq3: return "eq3";
    case IdentityId::Thm1: return "thm1";
    case IdentityId::Eq5: return "eq5";
    case IdentityId::RoundtripPsi: return "roundtrip_psi";
    case IdentityId::RoundtripPhi: return "roundtrip_phi";
    case IdentityId::WeightEq6: return "weight_eq6";
  }
  return "unknown";
}

nlohmann::json VerificationReport::to_json(bool include_elapsed) const {
  nlohmann::json j{
      {"identity", identity_name(identity)},
      {"params", params},
      {"passed", passed},
      {"witness", witness},
  };
  if (include_elapsed) j["elapsed_ms"] = elapsed.count();
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

nlohmann::json poly_mismatch(const std::string& lhs_name, const QPoly& lhs,
                             const std::string& rhs_name, const QPoly& rhs) {
  int first = -1;
  const int top = std::max(lhs.degree().value_or(-1), rhs.degree().value_or(-1));
  for (int d = 0; d <= top; ++d) {
    if (lhs.coeff(d) != rhs.coeff(d)) {
      first = d;
      break;
    }
  }
  return nlohmann::json{{"lhs", lhs_name},
                        {"lhs_coeffs", lhs.coeffs()},
                        {"rhs", rhs_name},
                        {"rhs_coeffs", rhs.coeffs()},
                        {"first_mismatch_degree", first}};
}

/* Number of nonnegative integer sequences of length n summing to m,
 * i.e. C(m+n-1, n-1), via an integer Pascal triangle. */
long long stars_and_bars(int m, int n) {
  if (n == 0) return m == 0 ? 1 : 0;
  const int rows = m + n - 1;
  std::vector<long long> row(static_cast<std::size_t>(rows) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= rows; ++i) {
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1];
  }
  return row[static_cast<std::size_t>(n - 1)];
}

/* Integer derangement numbers D_0..D_n by the classic recurrence. */
std::vector<long long> derangement_counts(int n) {
  std::vector<long long> d(static_cast<std::size_t>(n) + 1, 0);
  d[0] = 1;
  if (n >= 1) d[1] = 0;
  for (int k = 2; k <= n; ++k) {
    d[static_cast<std::size_t>(k)] =
        (k - 1) * (d[static_cast<std::size_t>(k) - 1] + d[static_cast<std::size_t>(k) - 2]);
  }
  return d;
}

/* Every nonnegative integer sequence of length n summing to m. */
template <typename Fn>
void for_each_composition(int n, int m, Fn&& fn) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, int rem) -> void {
    if (i == n - 1) {
      if (n > 0) a[static_cast<std::size_t>(i)] = rem;
      fn(static_cast<const std::vector<int>&>(a));
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      a[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, rem - v);
    }
  };
  if (n == 0) {
    if (m == 0) fn(static_cast<const std::vector<int>&>(a));
    return;
  }
  rec(rec, 0, m);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream));
}

/* Uniform draw in [0, max_inclusive] that does not depend on the
 * standard library's distribution implementation. */
int bounded_int(std::mt19937_64& rng, int max_inclusive) {
  const std::uint64_t range = static_cast<std::uint64_t>(max_inclusive) + 1;
  const std::uint64_t limit = ~0ull - ~0ull % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<int>(x % range);
}

Partition sample_partition(std::mt19937_64& rng, int length, int max_part) {
  std::vector<int> parts(static_cast<std::size_t>(length));
  for (int& p : parts) p = bounded_int(rng, max_part);
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition::unchecked(std::move(parts));
}

constexpr int kSamplePartMax = 20;

}  // namespace

VerificationReport verify_eq1(int n, const VerifyOptions& opt) {
  check_enumeration_guard(n, opt.guard);
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = IdentityId::Eq1;
  r.params = {{"n", n}, {"permutations", static_cast<long long>(factorial_u64(n))}};

  const int threads = resolve_threads(opt.threads);
  const QPoly lhs = threads == 1 ? maj_distribution_serial(n)
                                 : maj_distribution_parallel(n, threads, opt.progress);
  const QPoly rhs = q_factorial(n);
  r.passed = lhs == rhs;
  if (!r.passed) r.witness = poly_mismatch("sum q^maj over S_n", lhs, "[n]!", rhs);
  r.elapsed = since(t0);
  return r;
}

VerificationReport verify_eq2(int n, int m_max, const VerifyOptions& opt) {
  check_enumeration_guard(n, opt.guard);
  check_enumeration_guard(m_max, opt.guard, "m_max");
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = IdentityId::Eq2;
  r.params = {{"n", n}, {"m_max", m_max}};

  for (int m = 0; m <= m_max; ++m) {
    // Route (a): direct double loop over permutations and partitions.
    long long direct = 0;
    for (auto it = PermutationRange(n, opt.guard).begin();
         it != PermutationRange::end_sentinel{}; ++it) {
      const int s = m - detail::major_index(it.raw());
      if (s < 0) continue;
      for (auto pt = PartitionSumRange(n, s).begin(); pt != PartitionSumRange::end_sentinel{};
           ++pt) {
        ++direct;
      }
    }

    // Route (b): push every sequence of sum m through the column-sorting
    // bijection and count the distinct (lambda, pi) images.
    long long via_bijection = 0;
    bool structural_ok = true;
    nlohmann::json structural_witness;
    std::set<std::pair<std::vector<int>, std::vector<int>>> images;
    for_each_composition(n, m, [&](const std::vector<int>& a) {
      if (!structural_ok) return;
      const LabeledPartition lp = sort_columns(a);
      if (!is_standard(lp) || lp.mu.sum() != m) {
        structural_ok = false;
        structural_witness = {{"m", m}, {"sequence", a}, {"issue", "sort_columns image invalid"}};
        return;
      }
      const Partition lambda = psi_inv(lp);
      if (lambda.sum() + major_index(lp.pi) != m) {
        structural_ok = false;
        structural_witness = {{"m", m}, {"sequence", a}, {"issue", "weight not preserved"}};
        return;
      }
      images.emplace(lambda.parts(), lp.pi.values());
      ++via_bijection;
    });
    if (structural_ok && images.size() != static_cast<std::size_t>(via_bijection)) {
      structural_ok = false;
      structural_witness = {{"m", m}, {"issue", "bijection image collision"}};
    }

    const long long expected = stars_and_bars(m, n);
    if (!structural_ok || direct != expected || via_bijection != expected) {
      r.passed = false;
      r.witness = {{"m", m},
                   {"direct_count", direct},
                   {"via_sort_columns", via_bijection},
                   {"expected", expected}};
      if (!structural_ok) r.witness["structural"] = structural_witness;
      r.elapsed = since(t0);
      return r;
    }
    if (opt.progress) {
      opt.progress("eq2: m = " + std::to_string(m) + " done (count " + std::to_string(expected) +
                   ")");
    }
  }
  r.passed = true;
  r.elapsed = since(t0);
  return r;
}

VerificationReport verify_eq3(int n, const VerifyOptions& opt) {
  check_enumeration_guard(n, opt.guard);
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = IdentityId::Eq3;
  r.params = {{"n", n}};

  const int threads = resolve_threads(opt.threads);
  const QPoly brute = threads == 1
                          ? derangement_maj_distribution_serial(n)
                          : derangement_maj_distribution_parallel(n, threads, opt.progress);
  const QPoly formula = q_derangement_formula(n);
  const QPoly recurrence = q_derangement_recurrence(n);

  if (brute != formula) {
    r.witness = poly_mismatch("brute force over D_n", brute, "closed formula", formula);
  } else if (formula != recurrence) {
    r.witness = poly_mismatch("closed formula", formula, "inversion recurrence", recurrence);
  } else {
    r.passed = true;
  }
  r.elapsed = since(t0);
  return r;
}

VerificationReport verify_thm1(int n, const VerifyOptions& opt) {
  check_enumeration_guard(n, opt.guard);
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = IdentityId::Thm1;

  const int threads = resolve_threads(opt.threads);
  const DpBucketMap buckets =
      threads == 1 ? dp_buckets_serial(n) : dp_buckets_parallel(n, threads, opt.progress);

  long long total = 0;
  std::vector<long long> keys_of_size(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [sigma, bucket] : buckets) {
    total += static_cast<long long>(bucket.count);
    ++keys_of_size[sigma.size()];
  }
  r.params = {{"n", n},
              {"buckets", static_cast<long long>(buckets.size())},
              {"permutations", total}};

  if (total != static_cast<long long>(factorial_u64(n))) {
    r.witness = {{"issue", "bucket sizes do not sum to n!"},
                 {"total", total},
                 {"expected", static_cast<long long>(factorial_u64(n))}};
    r.elapsed = since(t0);
    return r;
  }
  const std::vector<long long> dk = derangement_counts(n);
  for (int k = 0; k <= n; ++k) {
    if (keys_of_size[static_cast<std::size_t>(k)] != dk[static_cast<std::size_t>(k)]) {
      r.witness = {{"issue", "bucket keys do not cover D_k exactly"},
                   {"k", k},
                   {"keys", keys_of_size[static_cast<std::size_t>(k)]},
                   {"expected", dk[static_cast<std::size_t>(k)]}};
      r.elapsed = since(t0);
      return r;
    }
  }
  for (const auto& [sigma, bucket] : buckets) {
    const int k = static_cast<int>(sigma.size());
    if (!detail::is_derangement(sigma)) {
      r.witness = {{"issue", "bucket key is not a derangement"}, {"sigma", sigma}};
      r.elapsed = since(t0);
      return r;
    }
    const QPoly expected = q_binomial(n, k).shifted(detail::major_index(sigma));
    if (bucket.maj_sum != expected) {
      r.witness = poly_mismatch("bucket sum", bucket.maj_sum, "q^maj(sigma) [n k]", expected);
      r.witness["sigma"] = sigma;
      r.witness["k"] = k;
      r.elapsed = since(t0);
      return r;
    }
  }
  r.passed = true;
  r.elapsed = since(t0);
  return r;
}

VerificationReport verify_eq5(int n, const VerifyOptions& opt) {
  check_enumeration_guard(n, opt.guard);
  const auto t0 = Clock::now();
  VerificationReport r;
  r.identity = IdentityId::Eq5;
  r.params = {{"n", n}};

  QPoly rhs;
  for (int k = 0; k <= n; ++k) rhs += q_binomial(n, k) * q_derangement_formula(k);
  const QPoly lhs = q_factorial(n);
  r.passed = lhs == rhs;
  if (!r.passed) r.witness = poly_mismatch("[n]!", lhs, "sum_k [n k] d_k", rhs);
  r.elapsed = since(t0);
  return r;
}

namespace {

/* A deterministic record of the first failing round-trip instance.
 * order ranks instances so concurrent sweeps agree on "first". */
struct RtFailure {
  std::uint64_t order = 0;
  nlohmann::json witness;
};

enum RtCategory { kPsi = 0, kPhi = 1, kWeight = 2 };

struct RtAccumulator {
  std::uint64_t instances = 0;
  std::uint64_t insertions = 0;
  std::optional<RtFailure> failures[3];

  void fail(RtCategory c, std::uint64_t order, nlohmann::json witness) {
    auto& slot = failures[c];
    if (!slot || order < slot->order) slot = RtFailure{order, std::move(witness)};
  }

  void merge(const RtAccumulator& other) {
    instances += other.instances;
    insertions += other.insertions;
    for (int c = 0; c < 3; ++c) {
      if (other.failures[c]) {
        if (!failures[c] || other.failures[c]->order < failures[c]->order) {
          failures[c] = other.failures[c];
        }
      }
    }
  }
};

/* Full bijection chain for one (pi, lambda) instance. */
void check_forward_instance(const Permutation& pi, const Partition& lambda, std::uint64_t order,
                            RtAccumulator& acc) {
  ++acc.instances;
  nlohmann::json base{{"pi", pi.values()}, {"lambda", lambda.parts()}};
  const char* stage = "psi";
  try {
    const int maj_pi = major_index(pi);
    const LabeledPartition lp = psi(lambda, pi);

    stage = "psi_weight";
    if (lp.mu.sum() != lambda.sum() + maj_pi) {
      base["stage"] = stage;
      acc.fail(kPsi, order, base);
      return;
    }
    stage = "psi_standard";
    if (!is_standard(lp)) {
      base["stage"] = stage;
      acc.fail(kPsi, order, base);
      return;
    }
    stage = "psi_roundtrip";
    const Partition lambda_back = psi_inv(lp);
    if (lambda_back != lambda) {
      base["stage"] = stage;
      base["lambda_back"] = lambda_back.parts();
      acc.fail(kPsi, order, base);
      return;
    }
    stage = "psi_inv_roundtrip";
    if (psi(lambda_back, pi) != lp) {
      base["stage"] = stage;
      acc.fail(kPsi, order, base);
      return;
    }

    stage = "phi_decompose";
    const Decomposition d = phi_decompose(lp);
    if (d.beta.sum() + d.gamma.sum() != lp.mu.sum()) {
      base["stage"] = "phi_weight_split";
      acc.fail(kPhi, order, base);
      return;
    }
    stage = "phi_insert";
    PhiInsertTrace trace;
    const LabeledPartition lp_back = phi_insert(d, &trace);
    acc.insertions += trace.insertions;
    if (lp_back != lp) {
      base["stage"] = "phi_roundtrip";
      base["got"] = to_json(lp_back);
      acc.fail(kPhi, order, base);
      return;
    }

    stage = "weight_eq6";
    const Partition alpha = psi_inv(LabeledPartition(d.beta, d.sigma));
    const long long lhs = lambda.sum() + maj_pi;
    const long long rhs = alpha.sum() + d.gamma.sum() + major_index(d.sigma);
    if (lhs != rhs) {
      base["stage"] = stage;
      base["lhs"] = lhs;
      base["rhs"] = rhs;
      acc.fail(kWeight, order, base);
      return;
    }
  } catch (const std::exception& e) {
    base["stage"] = stage;
    base["error"] = e.what();
    const bool psi_stage = std::string_view(stage).substr(0, 3) == "psi";
    acc.fail(psi_stage ? kPsi : kPhi, order, base);
  }
}

/* One (sigma, gamma) instance of the phi_insert-first direction. */
void check_insert_instance(const Permutation& sigma, const Partition& beta,
                           const Partition& gamma, std::uint64_t order, RtAccumulator& acc) {
  ++acc.instances;
  nlohmann::json base{
      {"sigma", sigma.values()}, {"beta", beta.parts()}, {"gamma", gamma.parts()}};
  try {
    PhiInsertTrace trace;
    const LabeledPartition lp = phi_insert(beta, sigma, gamma, &trace);
    acc.insertions += trace.insertions;
    const Decomposition got = phi_decompose(lp);
    if (!(got.beta == beta && got.gamma == gamma && got.sigma == sigma)) {
      base["stage"] = "phi_insert_roundtrip";
      base["got"] = to_json(got);
      acc.fail(kPhi, order, base);
    }
  } catch (const std::exception& e) {
    base["stage"] = "phi_insert";
    base["error"] = e.what();
    acc.fail(kPhi, order, base);
  }
}

}  // namespace

RoundtripReports verify_roundtrips(int n, int trials, const VerifyOptions& opt) {
  check_enumeration_guard(n, opt.guard);
  if (trials < 0) throw std::invalid_argument("verify_roundtrips: negative trials");
  const auto t0 = Clock::now();

  const int threads = resolve_threads(opt.threads);
  const std::uint64_t total = factorial_u64(n);
  const auto ranges = split_rank_blocks(total, threads == 1 ? 1 : threads * 4);
  std::vector<RtAccumulator> partial(ranges.size());
  std::vector<std::exception_ptr> errors(ranges.size());

  // Forward direction: exhaustive over S_n, `trials` sampled partitions
  // per permutation, seeded per permutation rank so any block split
  // sees identical data.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (int b = 0; b < static_cast<int>(ranges.size()); ++b) {
    try {
      auto& acc = partial[static_cast<std::size_t>(b)];
      std::uint64_t rank = ranges[static_cast<std::size_t>(b)].first;
      for_each_permutation_in_rank_range(
          n, ranges[static_cast<std::size_t>(b)].first, ranges[static_cast<std::size_t>(b)].second,
          [&](const std::vector<int>& raw) {
            const Permutation pi = Permutation::unchecked(raw);
            std::mt19937_64 rng(mix_seed(opt.seed, rank));
            for (int t = 0; t < trials; ++t) {
              const Partition lambda = sample_partition(rng, n, kSamplePartMax);
              check_forward_instance(pi, lambda, rank * static_cast<std::uint64_t>(trials) +
                                                     static_cast<std::uint64_t>(t),
                                     acc);
            }
            ++rank;
          });
      if (opt.progress) {
        std::string line = "roundtrips: block " + std::to_string(b + 1) + "/" +
                           std::to_string(ranges.size()) + " done";
#ifdef _OPENMP
#pragma omp critical(qmaj_progress)
#endif
        opt.progress(line);
      }
    } catch (...) {
      errors[static_cast<std::size_t>(b)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RtAccumulator acc;
  for (const auto& p : partial) acc.merge(p);

  // Insert-first direction: exhaustive over derangements sigma of every
  // size k <= n, sampled (beta, gamma) pairs.  beta is produced through
  // psi so that (beta, sigma) is standard.
  std::uint64_t order = total * static_cast<std::uint64_t>(std::max(trials, 1));
  for (int k = 0; k <= n; ++k) {
    for (auto it = DerangementRange(k, opt.guard).begin();
         it != DerangementRange::end_sentinel{}; ++it) {
      const Permutation sigma = *it;
      std::mt19937_64 rng(
          mix_seed(opt.seed, 0x9D2C5680ull + static_cast<std::uint64_t>(k) * 0x10001ull +
                                 permutation_lex_rank(it.raw())));
      for (int t = 0; t < trials; ++t) {
        const Partition alpha = sample_partition(rng, k, kSamplePartMax);
        const Partition beta = psi(alpha, sigma).mu;
        const Partition gamma = sample_partition(rng, n - k, kSamplePartMax);
        check_insert_instance(sigma, beta, gamma, order++, acc);
      }
    }
    if (opt.progress) opt.progress("roundtrips: insert direction k = " + std::to_string(k) + " done");
  }

  const std::map<std::string, long long> params{
      {"n", n},
      {"trials", trials},
      {"seed", static_cast<long long>(opt.seed)},
      {"instances", static_cast<long long>(acc.instances)},
      {"insertions", static_cast<long long>(acc.insertions)},
  };

  RoundtripReports out;
  const IdentityId ids[3] = {IdentityId::RoundtripPsi, IdentityId::RoundtripPhi,
                             IdentityId::WeightEq6};
  VerificationReport* reports[3] = {&out.psi, &out.phi, &out.weight};
  const auto elapsed = since(t0);
  for (int c = 0; c < 3; ++c) {
    reports[c]->identity = ids[c];
    reports[c]->params = params;
    reports[c]->passed = !acc.failures[c].has_value();
    if (acc.failures[c]) reports[c]->witness = acc.failures[c]->witness;
    reports[c]->elapsed = elapsed;
  }
  return out;
}

}  // namespace qmaj

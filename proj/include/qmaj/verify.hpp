#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qmaj/bijections.hpp"
#include "qmaj/kernels.hpp"

namespace qmaj {

enum class IdentityId {
  Eq1,           // sum over S_n of q^maj equals [n]!
  Eq2,           // coefficientwise: pairs (lambda, pi) of weight m vs C(m+n-1, n-1)
  Eq3,           // three routes to d_n(q) agree
  Thm1,          // each dp-bucket of S_n equals q^maj(sigma) [n k]
  Eq5,           // [n]! = sum_k [n k] d_k(q)
  RoundtripPsi,  // psi / psi_inv inverse pair + weight law
  RoundtripPhi,  // phi / phi_insert inverse pair + insertion uniqueness
  WeightEq6,     // |lambda| + maj(pi) = |alpha| + |gamma| + maj(sigma)
};

std::string_view identity_name(IdentityId id);

struct VerificationReport {
  IdentityId identity = IdentityId::Eq1;
  std::map<std::string, long long> params;
  bool passed = false;
  nlohmann::json witness;  // null when passed; replayable counterexample otherwise
  std::chrono::milliseconds elapsed{0};

  /* Canonical JSON document.  `include_elapsed = false` yields the form
   * used for determinism comparisons, since wall-clock time is the one
   * field that legitimately varies between runs. */
  nlohmann::json to_json(bool include_elapsed = true) const;
};

struct VerifyOptions {
  int threads = 0;  // <= 0: all available
  int guard = kDefaultEnumerationGuard;
  std::uint64_t seed = 42;
  ProgressFn progress = {};
};

/* Sum of q^maj over S_n equals [n]!, by exhaustive enumeration. */
VerificationReport verify_eq1(int n, const VerifyOptions& opt = {});

/* For every m <= m_max, the number of pairs (lambda, pi) with lambda of
 * at most n parts and |lambda| + maj(pi) = m equals the number of
 * nonnegative integer sequences of length n and sum m, i.e.
 * C(m+n-1, n-1).  Counted two ways: a direct double loop, and through
 * the column-sorting bijection applied to every sequence. */
VerificationReport verify_eq2(int n, int m_max, const VerifyOptions& opt = {});

/* Brute force over D_n, the closed formula, and the inversion
 * recurrence produce the same polynomial. */
VerificationReport verify_eq3(int n, const VerifyOptions& opt = {});

/* Bucket S_n by dp(pi); every bucket for sigma in D_k must equal
 * q^maj(sigma) [n k], the buckets must be keyed by exactly the
 * derangements of size <= n, and the bucket sizes must sum to n!. */
VerificationReport verify_thm1(int n, const VerifyOptions& opt = {});

/* [n]! = sum_k [n k] d_k(q), pure polynomial arithmetic. */
VerificationReport verify_eq5(int n, const VerifyOptions& opt = {});

/* Round-trip suite: exhaustive over pi in S_n with `trials` seeded
 * random partitions each (psi direction), plus exhaustive over
 * derangements sigma of every size k <= n with sampled gamma
 * (phi_insert direction).  Reports one verdict per identity family. */
struct RoundtripReports {
  VerificationReport psi;
  VerificationReport phi;
  VerificationReport weight;

  bool all_passed() const { return psi.passed && phi.passed && weight.passed; }
};

RoundtripReports verify_roundtrips(int n, int trials, const VerifyOptions& opt = {});

}  // namespace qmaj

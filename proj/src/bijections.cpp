#include "qmaj/bijections.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qmaj {

LabeledPartition::LabeledPartition(Partition mu_in, Permutation pi_in)
    : mu(std::move(mu_in)), pi(std::move(pi_in)) {
  if (mu.length() != pi.size()) {
    throw std::invalid_argument("labeled partition: mu has " + std::to_string(mu.length()) +
                                " parts but pi has size " + std::to_string(pi.size()));
  }
}

Decomposition::Decomposition(Partition beta_in, Partition gamma_in, Permutation sigma_in)
    : beta(std::move(beta_in)), gamma(std::move(gamma_in)), sigma(std::move(sigma_in)) {
  if (!is_derangement(sigma)) {
    throw std::invalid_argument("decomposition: sigma is not a derangement");
  }
  require_standard(LabeledPartition(beta, sigma), "decomposition");
}

int first_standardness_violation(const LabeledPartition& lp) {
  for (int i = 1; i < lp.pi.size(); ++i) {
    if (lp.pi.value(i) > lp.pi.value(i + 1) && lp.mu.part(i) <= lp.mu.part(i + 1)) return i;
  }
  return 0;
}

bool is_standard(const LabeledPartition& lp) { return first_standardness_violation(lp) == 0; }

void require_standard(const LabeledPartition& lp, const char* who) {
  const int i = first_standardness_violation(lp);
  if (i == 0) return;
  throw StandardnessError(
      std::string(who) + ": labeled partition is not standard at pair (" + std::to_string(i) +
          "," + std::to_string(i + 1) + "): mu = (" + std::to_string(lp.mu.part(i)) + "," +
          std::to_string(lp.mu.part(i + 1)) + "), pi = (" + std::to_string(lp.pi.value(i)) + "," +
          std::to_string(lp.pi.value(i + 1)) + ")",
      i);
}

LabeledPartition psi(const Partition& lambda, const Permutation& pi) {
  if (lambda.length() != pi.size()) {
    throw std::invalid_argument("psi: lambda has " + std::to_string(lambda.length()) +
                                " parts but pi has size " + std::to_string(pi.size()));
  }
  const std::vector<int> phi = suffix_descent_counts(pi);
  std::vector<int> mu(lambda.parts());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += phi[i];
  return LabeledPartition(Partition(std::move(mu)), pi);
}

Partition psi_inv(const LabeledPartition& lp) {
  require_standard(lp, "psi_inv");
  const std::vector<int> phi = suffix_descent_counts(lp.pi);
  std::vector<int> lambda(lp.mu.parts());
  for (std::size_t i = 0; i < lambda.size(); ++i) lambda[i] -= phi[i];
  // Standardness guarantees the difference is again weakly decreasing
  // and nonnegative; the checked constructor backstops that argument.
  return Partition(std::move(lambda));
}

LabeledPartition sort_columns(const std::vector<int>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) {
      throw std::invalid_argument("sort_columns: entry " + std::to_string(i + 1) +
                                  " is negative (" + std::to_string(a[i]) + ")");
    }
  }
  const int n = static_cast<int>(a.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int x, int y) {
    if (a[static_cast<std::size_t>(x)] != a[static_cast<std::size_t>(y)])
      return a[static_cast<std::size_t>(x)] > a[static_cast<std::size_t>(y)];
    return x < y;
  });
  std::vector<int> mu, pi;
  mu.reserve(a.size());
  pi.reserve(a.size());
  for (int i : idx) {
    mu.push_back(a[static_cast<std::size_t>(i)]);
    pi.push_back(i + 1);
  }
  return LabeledPartition(Partition::unchecked(std::move(mu)), Permutation::unchecked(std::move(pi)));
}

std::vector<int> sort_columns_inv(const LabeledPartition& lp) {
  require_standard(lp, "sort_columns_inv");
  std::vector<int> a(static_cast<std::size_t>(lp.pi.size()), 0);
  for (int i = 1; i <= lp.pi.size(); ++i) {
    a[static_cast<std::size_t>(lp.pi.value(i)) - 1] = lp.mu.part(i);
  }
  return a;
}

Decomposition phi_decompose(const LabeledPartition& lp) {
  require_standard(lp, "phi_decompose");
  std::vector<int> beta, gamma;
  for (int i = 1; i <= lp.pi.size(); ++i) {
    if (lp.pi.value(i) == i) {
      gamma.push_back(lp.mu.part(i));
    } else {
      beta.push_back(lp.mu.part(i));
    }
  }
  Decomposition d(Partition::unchecked(std::move(beta)), Partition::unchecked(std::move(gamma)),
                  dp_reduce(lp.pi));
  if (d.beta.sum() + d.gamma.sum() != lp.mu.sum()) {
    throw std::logic_error("phi_decompose: weight split does not add up");  // unreachable
  }
  return d;
}

namespace {

/* One phi' insertion step: place part g at the head of its equal run in
 * mu, then insert the fixed point at the unique position s in the run
 * satisfying pi_{s-1} < s < pi_s, with the run boundaries read as -inf
 * and +inf.
 *
 * The right inequality is strict.  Under the lax form (s <= pi_s),
 * a position already fixed in pi (pi_s = s, left behind by an earlier
 * insertion of an equal part) would be admissible as well, and the
 * admissible positions would form a streak s, s+1, ..., s' with
 * pi_j = j in between; inserting at any of them yields the same
 * permutation, and the strict form selects the last one, keeping the
 * choice of s unique. */
void insert_one(std::vector<int>& mu, std::vector<int>& pi, int g) {
  const int old_len = static_cast<int>(mu.size());
  int r = 1;
  while (r <= old_len && mu[static_cast<std::size_t>(r) - 1] > g) ++r;
  mu.insert(mu.begin() + (r - 1), g);
  int t = r;
  while (t < static_cast<int>(mu.size()) && mu[static_cast<std::size_t>(t)] == g) ++t;

  int s_found = 0;
  int matches = 0;
  for (int s = r; s <= t; ++s) {
    const long long left = (s - 1 == r - 1) ? std::numeric_limits<long long>::min()
                                            : pi[static_cast<std::size_t>(s) - 2];
    const long long right = (s == t) ? std::numeric_limits<long long>::max()
                                     : pi[static_cast<std::size_t>(s) - 1];
    if (left < s && s < right) {
      s_found = s;
      ++matches;
    }
  }
  if (matches != 1) {
    throw std::logic_error("phi_insert: expected exactly one admissible fixed-point position in [" +
                           std::to_string(r) + "," + std::to_string(t) + "], found " +
                           std::to_string(matches));
  }
  pi = detail::insert_fixed_point(pi, s_found);
}

}  // namespace

LabeledPartition phi_insert(const Partition& beta, const Permutation& sigma,
                            const Partition& gamma, PhiInsertTrace* trace) {
  if (beta.length() != sigma.size()) {
    throw std::invalid_argument("phi_insert: beta has " + std::to_string(beta.length()) +
                                " parts but sigma has size " + std::to_string(sigma.size()));
  }
  if (!is_derangement(sigma)) {
    throw std::invalid_argument("phi_insert: sigma is not a derangement");
  }
  require_standard(LabeledPartition(beta, sigma), "phi_insert");

  std::vector<int> mu = beta.parts();
  std::vector<int> pi = sigma.values();
  for (int i = 1; i <= gamma.length(); ++i) {
    insert_one(mu, pi, gamma.part(i));
    LabeledPartition step(Partition::unchecked(mu), Permutation::unchecked(pi));
    if (!is_standard(step)) {
      throw std::logic_error("phi_insert: intermediate state after inserting part " +
                             std::to_string(i) + " is not standard");
    }
    if (trace) {
      trace->steps.push_back(step);
      ++trace->insertions;
    }
  }
  return LabeledPartition(Partition::unchecked(std::move(mu)),
                          Permutation::unchecked(std::move(pi)));
}

LabeledPartition phi_insert(const Decomposition& d, PhiInsertTrace* trace) {
  return phi_insert(d.beta, d.sigma, d.gamma, trace);
}

}  // namespace qmaj

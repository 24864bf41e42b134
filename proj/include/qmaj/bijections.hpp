#pragma once

#include <cstdint>
#include <vector>

#include "qmaj/errors.hpp"
#include "qmaj/partition.hpp"
#include "qmaj/permutation.hpp"

namespace qmaj {

/* A partition paired with a permutation of the same length, written as a
 * two-row array.  Standard means every label descent forces a strict
 * part decrease: pi_i > pi_{i+1} implies mu_i > mu_{i+1} (equivalently,
 * equal parts carry increasing labels). */
struct LabeledPartition {
  Partition mu;
  Permutation pi;

  LabeledPartition() = default;
  LabeledPartition(Partition mu_in, Permutation pi_in);

  bool operator==(const LabeledPartition&) const = default;
};

/* Result of splitting a standard labeled partition along the fixed
 * points of its label permutation: beta and sigma live on the
 * derangement points, gamma on the fixed points. */
struct Decomposition {
  Partition beta;
  Partition gamma;
  Permutation sigma;

  Decomposition() = default;
  /* Validates: sigma is a derangement, |beta| matches sigma's size, and
   * (beta, sigma) is standard. */
  Decomposition(Partition beta_in, Partition gamma_in, Permutation sigma_in);

  bool operator==(const Decomposition&) const = default;
};

bool is_standard(const LabeledPartition& lp);

/* 0 when standard, otherwise the 1-based index i of the first adjacent
 * pair (i, i+1) violating the predicate. */
int first_standardness_violation(const LabeledPartition& lp);

/* Throws StandardnessError naming the violating pair. */
void require_standard(const LabeledPartition& lp, const char* who);

/* mu_i = lambda_i + phi_i with phi the suffix descent counts of pi.
 * The result is standard and |mu| = |lambda| + maj(pi). */
LabeledPartition psi(const Partition& lambda, const Permutation& pi);

/* Inverse of psi: lambda_i = mu_i - phi_i.  Requires a standard input
 * (which guarantees the result is a partition). */
Partition psi_inv(const LabeledPartition& lp);

/* Sort the columns of the two-row array (a_i over i): parts descending,
 * ties broken by ascending original index.  That tie rule is the unique
 * one producing a standard result. */
LabeledPartition sort_columns(const std::vector<int>& a);

/* Inverse of sort_columns: a[pi_i] = mu_i. */
std::vector<int> sort_columns_inv(const LabeledPartition& lp);

/* Split a standard labeled partition along the fixed points of pi:
 * sigma = dp(pi), beta = mu restricted to derangement points, gamma = mu
 * restricted to fixed points.  (beta, sigma) is standard and
 * |beta| + |gamma| = |mu|. */
Decomposition phi_decompose(const LabeledPartition& lp);

/* Optional instrumentation for phi_insert: the state after each
 * insertion, and the number of insertions performed.  Every insertion
 * has its position-choice uniqueness and intermediate standardness
 * checked; a violation throws std::logic_error. */
struct PhiInsertTrace {
  std::vector<LabeledPartition> steps;
  std::uint64_t insertions = 0;
};

/* Inverse of phi_decompose.  Starting from (beta, sigma), insert the
 * parts of gamma in the given (weakly decreasing) order; each part
 * enters mu at the head of its equal run, and the matching label enters
 * pi as a new fixed point at the unique admissible position inside the
 * run. */
LabeledPartition phi_insert(const Partition& beta, const Permutation& sigma,
                            const Partition& gamma, PhiInsertTrace* trace = nullptr);
LabeledPartition phi_insert(const Decomposition& d, PhiInsertTrace* trace = nullptr);

}  // namespace qmaj

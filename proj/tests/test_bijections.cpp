#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qmaj/bijections.hpp"
#include "qmaj/enumeration.hpp"

using qmaj::Decomposition;
using qmaj::LabeledPartition;
using qmaj::Partition;
using qmaj::Permutation;
using qmaj::PhiInsertTrace;

namespace {

LabeledPartition lp(std::vector<int> mu, std::vector<int> pi) {
  return LabeledPartition(Partition(std::move(mu)), Permutation::from_one_line(std::move(pi)));
}

Partition sample_partition(std::mt19937_64& rng, int length, int max_part) {
  std::vector<int> parts(static_cast<std::size_t>(length));
  for (int& p : parts) p = static_cast<int>(rng() % static_cast<std::uint64_t>(max_part + 1));
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

}  // namespace

TEST_CASE("is_standard") {
  CHECK(qmaj::is_standard(lp({8, 8, 6, 6, 4, 3, 3, 3, 1}, {3, 9, 2, 7, 8, 1, 4, 6, 5})));
  CHECK_FALSE(qmaj::is_standard(lp({2, 2}, {2, 1})));
  CHECK(qmaj::is_standard(lp({5, 5}, {1, 2})));
  CHECK(qmaj::is_standard(LabeledPartition{}));
  CHECK(qmaj::first_standardness_violation(lp({2, 2}, {2, 1})) == 1);
  CHECK_THROWS_AS(LabeledPartition(Partition({1, 1}), Permutation::identity(3)),
                  std::invalid_argument);
}

TEST_CASE("psi: worked examples") {
  CHECK(qmaj::psi(Partition({5, 4, 4, 4, 4, 3, 2}), Permutation::from_one_line({5, 2, 1, 4, 7, 3, 6})) ==
        lp({8, 6, 5, 5, 5, 3, 2}, {5, 2, 1, 4, 7, 3, 6}));
  CHECK(qmaj::psi(Partition({5, 5, 4, 4, 2, 2, 2, 2, 1}),
                  Permutation::from_one_line({3, 9, 2, 7, 8, 1, 4, 6, 5})) ==
        lp({8, 8, 6, 6, 4, 3, 3, 3, 1}, {3, 9, 2, 7, 8, 1, 4, 6, 5}));
  const Partition any({7, 3, 0});
  CHECK(qmaj::psi(any, Permutation::identity(3)).mu == any);
  CHECK_THROWS_AS(qmaj::psi(Partition({1, 1}), Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("psi_inv: worked examples and error reporting") {
  CHECK(qmaj::psi_inv(lp({8, 8, 6, 6, 4, 3, 3, 3, 1}, {3, 9, 2, 7, 8, 1, 4, 6, 5})) ==
        Partition({5, 5, 4, 4, 2, 2, 2, 2, 1}));
  CHECK(qmaj::psi_inv(lp({8, 5, 5, 3, 2}, {3, 1, 5, 2, 4})) == Partition({6, 4, 4, 3, 2}));
  const Partition any({4, 4, 1});
  CHECK(qmaj::psi_inv(LabeledPartition(any, Permutation::identity(3))) == any);

  try {
    qmaj::psi_inv(lp({3, 2, 2}, {1, 3, 2}));
    FAIL("expected StandardnessError");
  } catch (const qmaj::StandardnessError& e) {
    CHECK(e.pair_index() == 2);
  }
}

TEST_CASE("sort_columns: worked examples") {
  const auto out = qmaj::sort_columns({3, 6, 8, 3, 1, 3, 6, 4, 8});
  CHECK(out == lp({8, 8, 6, 6, 4, 3, 3, 3, 1}, {3, 9, 2, 7, 8, 1, 4, 6, 5}));
  CHECK(qmaj::sort_columns({0, 0, 0}) == lp({0, 0, 0}, {1, 2, 3}));
  CHECK(qmaj::sort_columns({1}) == lp({1}, {1}));
  CHECK(qmaj::sort_columns({}) == LabeledPartition{});
  CHECK_THROWS_AS(qmaj::sort_columns({1, -2}), std::invalid_argument);
}

TEST_CASE("sort_columns_inv: worked examples") {
  CHECK(qmaj::sort_columns_inv(lp({8, 8, 6, 6, 4, 3, 3, 3, 1}, {3, 9, 2, 7, 8, 1, 4, 6, 5})) ==
        std::vector<int>{3, 6, 8, 3, 1, 3, 6, 4, 8});
  CHECK(qmaj::sort_columns_inv(lp({0, 0}, {1, 2})) == std::vector<int>{0, 0});
  CHECK(qmaj::sort_columns_inv(lp({8, 6, 5, 5, 5, 3, 2}, {5, 2, 1, 4, 7, 3, 6})) ==
        std::vector<int>{5, 6, 3, 5, 8, 2, 5});
  CHECK_THROWS_AS(qmaj::sort_columns_inv(lp({2, 2}, {2, 1})), qmaj::StandardnessError);
}

TEST_CASE("sort_columns round trip, exhaustive over short sequences") {
  // every sequence of length <= 5 with entries <= 4
  for (int n = 0; n <= 5; ++n) {
    std::vector<int> a(static_cast<std::size_t>(n), 0);
    while (true) {
      const auto image = qmaj::sort_columns(a);
      CHECK(qmaj::is_standard(image));
      CHECK(image.mu.sum() == std::accumulate(a.begin(), a.end(), 0LL));
      CHECK(qmaj::sort_columns_inv(image) == a);
      int i = n - 1;
      while (i >= 0 && a[static_cast<std::size_t>(i)] == 4) {
        a[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++a[static_cast<std::size_t>(i)];
    }
  }
}

TEST_CASE("phi_decompose: worked examples") {
  const auto d = qmaj::phi_decompose(lp({8, 6, 5, 5, 5, 3, 2}, {5, 2, 1, 4, 7, 3, 6}));
  CHECK(d.beta == Partition({8, 5, 5, 3, 2}));
  CHECK(d.gamma == Partition({6, 5}));
  CHECK(d.sigma == Permutation::from_one_line({3, 1, 5, 2, 4}));

  // identity labels: everything is a fixed point
  const auto id = qmaj::phi_decompose(lp({4, 2, 2}, {1, 2, 3}));
  CHECK(id.beta == Partition{});
  CHECK(id.gamma == Partition({4, 2, 2}));
  CHECK(id.sigma == Permutation{});

  // derangement labels: nothing is a fixed point
  const auto der = qmaj::phi_decompose(lp({5, 3}, {2, 1}));
  CHECK(der.beta == Partition({5, 3}));
  CHECK(der.gamma == Partition{});
  CHECK(der.sigma == Permutation::from_one_line({2, 1}));

  CHECK_THROWS_AS(qmaj::phi_decompose(lp({2, 2}, {2, 1})), qmaj::StandardnessError);
}

TEST_CASE("phi_insert: worked example including the intermediate state") {
  PhiInsertTrace trace;
  const auto out = qmaj::phi_insert(Partition({8, 5, 5, 3, 2}),
                                    Permutation::from_one_line({3, 1, 5, 2, 4}),
                                    Partition({6, 5}), &trace);
  CHECK(out == lp({8, 6, 5, 5, 5, 3, 2}, {5, 2, 1, 4, 7, 3, 6}));
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.insertions == 2);
  CHECK(trace.steps[0] == lp({8, 6, 5, 5, 3, 2}, {4, 2, 1, 6, 3, 5}));
  CHECK(trace.steps[1] == out);
}

TEST_CASE("phi_insert: degenerate inputs") {
  // inserting into nothing builds the identity labeling
  CHECK(qmaj::phi_insert(Partition{}, Permutation{}, Partition({4, 2, 2})) ==
        lp({4, 2, 2}, {1, 2, 3}));
  // empty gamma leaves (beta, sigma) unchanged
  CHECK(qmaj::phi_insert(Partition({5, 3}), Permutation::from_one_line({2, 1}), Partition{}) ==
        lp({5, 3}, {2, 1}));
}

TEST_CASE("phi_insert: precondition errors") {
  // sigma not a derangement
  CHECK_THROWS_AS(
      qmaj::phi_insert(Partition({3, 2}), Permutation::from_one_line({1, 2}), Partition({1})),
      std::invalid_argument);
  // (beta, sigma) not standard
  CHECK_THROWS_AS(
      qmaj::phi_insert(Partition({2, 2}), Permutation::from_one_line({2, 1}), Partition({1})),
      qmaj::StandardnessError);
  // length mismatch
  CHECK_THROWS_AS(
      qmaj::phi_insert(Partition({3}), Permutation::from_one_line({2, 1}), Partition({1})),
      std::invalid_argument);
  // non-monotone gamma is rejected where gamma is constructed
  CHECK_THROWS_AS(Partition({2, 4}), std::invalid_argument);
}

TEST_CASE("decomposition constructor validates") {
  CHECK_THROWS_AS(Decomposition(Partition({3}), Partition{}, Permutation::identity(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      Decomposition(Partition({2, 2}), Partition{}, Permutation::from_one_line({2, 1})),
      qmaj::StandardnessError);
  CHECK_NOTHROW(Decomposition(Partition({3, 2}), Partition({9}), Permutation::from_one_line({2, 1})));
}

TEST_CASE("phi round trips, exhaustive over pi for n <= 5, sampled mu") {
  std::mt19937_64 rng(20240817);
  for (int n = 0; n <= 5; ++n) {
    for (auto it = qmaj::PermutationRange(n).begin(); it != qmaj::PermutationRange::end_sentinel{};
         ++it) {
      const Permutation pi = *it;
      for (int trial = 0; trial < 20; ++trial) {
        const Partition lambda = sample_partition(rng, n, 8);
        const LabeledPartition m = qmaj::psi(lambda, pi);
        CAPTURE(pi.values());
        CAPTURE(lambda.parts());

        // psi invariants
        CHECK(qmaj::is_standard(m));
        CHECK(m.mu.sum() == lambda.sum() + qmaj::major_index(pi));
        CHECK(qmaj::psi_inv(m) == lambda);

        // phi' . phi = id, with every intermediate state standard
        const Decomposition d = qmaj::phi_decompose(m);
        CHECK(d.beta.sum() + d.gamma.sum() == m.mu.sum());
        PhiInsertTrace trace;
        CHECK(qmaj::phi_insert(d, &trace) == m);
        CHECK(trace.insertions == static_cast<std::uint64_t>(d.gamma.length()));
        for (const auto& step : trace.steps) CHECK(qmaj::is_standard(step));

        // Weight chain: |lambda| + maj(pi) = |alpha| + |gamma| + maj(sigma)
        const Partition alpha = qmaj::psi_inv(LabeledPartition(d.beta, d.sigma));
        CHECK(lambda.sum() + qmaj::major_index(pi) ==
              alpha.sum() + d.gamma.sum() + qmaj::major_index(d.sigma));
      }
    }
  }
}

TEST_CASE("phi . phi' = id, exhaustive over sigma for k <= n <= 5, sampled beta/gamma") {
  std::mt19937_64 rng(987654321);
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (auto it = qmaj::DerangementRange(k).begin();
           it != qmaj::DerangementRange::end_sentinel{}; ++it) {
        const Permutation sigma = *it;
        for (int trial = 0; trial < 10; ++trial) {
          const Partition alpha = sample_partition(rng, k, 8);
          const Partition beta = qmaj::psi(alpha, sigma).mu;
          const Partition gamma = sample_partition(rng, n - k, 8);
          CAPTURE(sigma.values());
          CAPTURE(beta.parts());
          CAPTURE(gamma.parts());
          const LabeledPartition m = qmaj::phi_insert(beta, sigma, gamma);
          CHECK(qmaj::is_standard(m));
          const Decomposition d = qmaj::phi_decompose(m);
          CHECK(d == Decomposition(beta, gamma, sigma));
        }
      }
    }
  }
}

TEST_CASE("every standard labeled partition in a small box, no sampling") {
  // Small parts make equal-part runs (the delicate case for phi_insert's
  // position choice) the norm rather than the exception.
  for (int n = 0; n <= 4; ++n) {
    const int cap = 3;
    std::vector<std::vector<int>> mus;
    std::vector<int> mu(static_cast<std::size_t>(n), 0);
    auto gen = [&](auto&& self, int i, int hi) -> void {
      if (i == n) {
        mus.push_back(mu);
        return;
      }
      for (int v = hi; v >= 0; --v) {
        mu[static_cast<std::size_t>(i)] = v;
        self(self, i + 1, v);
      }
    };
    gen(gen, 0, cap);

    for (auto it = qmaj::PermutationRange(n).begin(); it != qmaj::PermutationRange::end_sentinel{};
         ++it) {
      const Permutation pi = *it;
      for (const auto& parts : mus) {
        const LabeledPartition m(Partition(parts), pi);
        if (!qmaj::is_standard(m)) continue;
        CAPTURE(pi.values());
        CAPTURE(parts);

        const Partition lambda = qmaj::psi_inv(m);
        CHECK(qmaj::psi(lambda, pi) == m);

        const Decomposition d = qmaj::phi_decompose(m);
        PhiInsertTrace trace;
        CHECK(qmaj::phi_insert(d, &trace) == m);
        for (const auto& step : trace.steps) CHECK(qmaj::is_standard(step));

        const Partition alpha = qmaj::psi_inv(LabeledPartition(d.beta, d.sigma));
        CHECK(lambda.sum() + qmaj::major_index(pi) ==
              alpha.sum() + d.gamma.sum() + qmaj::major_index(d.sigma));
      }
    }
  }
}

TEST_CASE("full worked chain: (lambda, pi) -> (alpha, gamma) with sigma") {
  const Partition lambda({5, 4, 4, 4, 4, 3, 2});
  const Permutation pi = Permutation::from_one_line({5, 2, 1, 4, 7, 3, 6});
  CHECK(qmaj::major_index(pi) == 8);

  const LabeledPartition m = qmaj::psi(lambda, pi);
  CHECK(m.mu == Partition({8, 6, 5, 5, 5, 3, 2}));

  const Decomposition d = qmaj::phi_decompose(m);
  CHECK(d.sigma == Permutation::from_one_line({3, 1, 5, 2, 4}));
  CHECK(d.beta == Partition({8, 5, 5, 3, 2}));
  CHECK(d.gamma == Partition({6, 5}));

  const Partition alpha = qmaj::psi_inv(LabeledPartition(d.beta, d.sigma));
  CHECK(alpha == Partition({6, 4, 4, 3, 2}));

  CHECK(lambda.sum() + qmaj::major_index(pi) ==
        alpha.sum() + d.gamma.sum() + qmaj::major_index(d.sigma));
}

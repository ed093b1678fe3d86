#include <gtest/gtest.h>

#include <random>

#include "srg/errors.hpp"
#include "srg/exact_linalg.hpp"
#include "srg/kernels.hpp"
#include "srg/lattice_graph.hpp"
#include "srg/modular.hpp"

using namespace srg;

TEST(Primes, LargePrimesAreDescendingPrimes) {
  const auto ps = modular::large_primes(20);
  ASSERT_EQ(ps.size(), 20u);
  EXPECT_EQ(ps[0], 2147483647u);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) EXPECT_LT(ps[i], ps[i - 1]);
    for (std::uint64_t f = 2; f * f <= ps[i]; ++f) ASSERT_NE(ps[i] % f, 0u) << ps[i];
  }
}

TEST(RankModP, BoundsRationalRank) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dist(-4, 4);
  const auto p = modular::large_primes(1)[0];
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = dist(rng);
    if (trial % 2) m.row(5)[0] = 0;
    EXPECT_LE(modular::rank_mod_p(m, p), rank(m));
    EXPECT_EQ(modular::rank_mod_p(m, p), rank(m));  // entries far below p
  }
  // rank drops modulo a prime dividing a pivot
  const IntMatrix m{{3, 0}, {0, 1}};
  EXPECT_EQ(modular::rank_mod_p(m, 3), 1u);
  EXPECT_EQ(modular::nullity_mod_p(m, 3), 1u);
}

TEST(Annihilator, OctahedronMinimalPolynomial) {
  const auto a = SRGraph(3, 2).adjacency_matrix();
  const std::vector<long> roots{4, 0, -2};
  const auto r = modular::check_annihilator(a, roots);
  EXPECT_TRUE(r.annihilates);
  const std::vector<long> missing{4, 0};
  EXPECT_FALSE(modular::check_annihilator(a, missing).annihilates);
}

TEST(Annihilator, SerialAndParallelAgree) {
  const auto a = SRGraph(3, 4).adjacency_matrix();
  const std::vector<long> roots{8, 3, 2, 1, 0, -1, -2, -3};
  const auto s = modular::check_annihilator(a, roots, Execution::serial);
  const auto p = modular::check_annihilator(a, roots, Execution::parallel);
  EXPECT_EQ(s.annihilates, p.annihilates);
  EXPECT_EQ(s.entry_bound, p.entry_bound);
  // the product of the primes exceeds the entry bound
  BigInt prod = 1;
  for (auto q : s.primes) prod *= static_cast<unsigned long>(q);
  EXPECT_GT(prod, s.entry_bound);
}

TEST(Annihilator, ResidueIsZeroExactlyWhenRootsCoverSpectrum) {
  const auto a = SRGraph(3, 3).adjacency_matrix();
  const auto p = modular::large_primes(1)[0];
  const std::vector<long> full{6, 1, 0, -2, -3};
  for (auto x : modular::annihilator_residue(a, full, p)) ASSERT_EQ(x, 0u);
  const std::vector<long> partial{6, 1, 0, -2};
  bool nonzero = false;
  for (auto x : modular::annihilator_residue(a, partial, p)) nonzero |= x != 0;
  EXPECT_TRUE(nonzero);
}

TEST(Kernels, BareissUpdateSerialParallel) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> dist(-20, 20);
  IntMatrix m(40, 40);
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j) m(i, j) = dist(rng);
  m(0, 0) = 7;
  IntMatrix s = m, p = m;
  kernels::bareiss_update(s, 0, 0, BigInt(1), Execution::serial);
  kernels::bareiss_update(p, 0, 0, BigInt(1), Execution::parallel);
  EXPECT_EQ(s, p);
  for (std::size_t i = 1; i < 40; ++i) EXPECT_EQ(s(i, 0), 0);
}

TEST(Kernels, AdjacencyGatherSerialParallel) {
  const SRGraph g(5, 8);
  std::vector<Coeff> in(g.size()), a(g.size()), b(g.size());
  for (std::size_t i = 0; i < in.size(); ++i) in[i] = static_cast<Coeff>((i * 2654435761u) % 101) - 50;
  kernels::adjacency_gather(g, in, a, Execution::serial);
  kernels::adjacency_gather(g, in, b, Execution::parallel);
  EXPECT_EQ(a, b);

  std::vector<Coeff> huge(g.size(), std::numeric_limits<Coeff>::max() / 2);
  EXPECT_THROW(kernels::adjacency_gather(g, huge, a, Execution::parallel), OverflowError);
}

TEST(Kernels, ForEachIndexRethrows) {
  std::vector<int> out(100, 0);
  kernels::for_each_index(out.size(), Execution::parallel, [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  EXPECT_THROW(kernels::for_each_index(10, Execution::parallel,
                                       [](std::size_t i) {
                                         if (i == 7) throw DomainError("seven");
                                       }),
               DomainError);
  EXPECT_GE(kernels::max_threads(), 1);
}

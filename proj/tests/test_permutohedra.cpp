#include <gtest/gtest.h>

#include "srg/eigenbasis3.hpp"
#include "srg/errors.hpp"
#include "srg/exact_linalg.hpp"
#include "srg/float_spectrum.hpp"
#include "srg/lattice_graph.hpp"
#include "srg/permutation.hpp"
#include "srg/permutohedra.hpp"
#include "srg/sparse_vector.hpp"

using namespace srg;
using namespace srg::perm;

namespace {

std::vector<Rational> rationals(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Permutations, Basics) {
  const auto p = Permutation::parse("3142");
  EXPECT_EQ(p.inversions(), 3);
  EXPECT_EQ(p.sign(), -1);
  EXPECT_EQ(p.str(), "3142");
  EXPECT_EQ(Permutation::reversal(4).inversions(), 6);
  const auto all = all_permutations(4);
  ASSERT_EQ(all.size(), 24u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_THROW(Permutation::parse("3143"), DomainError);
}

TEST(Offset, Examples) {
  const OffsetVector d4{Rational(-3, 2), Rational(-1, 2), Rational(1, 2), Rational(3, 2)};
  EXPECT_EQ(standard_offset(4), d4);
  EXPECT_EQ(standard_offset(3), rationals({-1, 0, 1}));
  EXPECT_EQ(standard_offset(1), rationals({0}));
}

TEST(Centers, Counts) {
  const auto c33 = enumerate_centers(3, 3);
  ASSERT_EQ(c33.size(), 1u);
  EXPECT_EQ(c33[0].center, rationals({1, 1, 1}));
  EXPECT_TRUE(enumerate_centers(3, 2).empty());
  EXPECT_EQ(enumerate_centers(4, 6).size(), 1u);
  for (int d = 2; d <= 5; ++d)
    for (int n = 0; n <= 14; ++n) EXPECT_EQ(enumerate_centers(d, n).size(), center_count(d, n)) << d << "," << n;
}

TEST(PermutohedronVector, HexagonUpToSign) {
  const SRGraph g(3, 3);
  const PermutohedronSpec s{rationals({1, 1, 1}), standard_offset(3)};
  const auto h = permutohedron_vector(g, s);
  const auto hex = eigen3::hexagon_vector(3, 1, 1, 1);
  EXPECT_TRUE(h == hex || h == -hex);
}

TEST(PermutohedronVector, FourDimensionalExample) {
  const SRGraph g(4, 6);
  const auto c = enumerate_centers(4, 6);
  ASSERT_EQ(c.size(), 1u);
  const Rational h(3, 2);
  EXPECT_EQ(c[0].center, (std::vector<Rational>{h, h, h, h}));
  const auto v = permutohedron_vector(g, c[0]);
  EXPECT_EQ(v.support_size(), 24u);
  EXPECT_TRUE(is_eigenvector(g, v, -6));
}

TEST(PermutohedronVector, Errors) {
  const SRGraph g(3, 3);
  EXPECT_THROW(permutohedron_vector(g, {rationals({0, 1, 2}), standard_offset(3)}), DomainError);
  EXPECT_THROW(permutohedron_vector(g, {rationals({1, 1, 1}), rationals({0, 0, 1})}), DomainError);
  EXPECT_THROW(permutohedron_vector(g, {rationals({1, 1}), standard_offset(3)}), MismatchError);
  try {
    permutohedron_vector(g, {rationals({0, 1, 2}), standard_offset(3)});
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("123"), std::string::npos);
  }
}

TEST(Family, EigenvectorsAndFullRank) {
  for (int d = 3; d <= 4; ++d)
    for (int n = 0; n <= 8; ++n) {
      const SRGraph g(d, n);
      const auto check = verify_permutohedron_family(g, Execution::serial);
      EXPECT_EQ(check.count, center_count(d, n));
      EXPECT_EQ(check.failures, 0u);
      EXPECT_EQ(permutohedron_family_rank(g), check.count);
    }
  const SRGraph g5(5, 12);
  const auto c5 = verify_permutohedron_family(g5);
  EXPECT_EQ(c5.count, center_count(5, 12));
  EXPECT_EQ(c5.failures, 0u);
}

TEST(Family, LinesMeetPermutohedraInOppositeSignedPairs) {
  for (int d = 3; d <= 4; ++d)
    for (int n = d * (d - 1) / 2; n <= 8; ++n) {
      const SRGraph g(d, n);
      const auto lines = distinct_lattice_lines(d, n);
      for (const auto& spec : enumerate_centers(d, n)) {
        const auto h = permutohedron_vector(g, spec);
        for (const auto& line : lines) {
          int points = 0, signed_sum = 0;
          for (const auto& x : line.members()) {
            const Coeff c = h.at(x);
            if (c != 0) {
              ++points;
              signed_sum += static_cast<int>(c);
            }
          }
          ASSERT_TRUE(points == 0 || points == 2) << points;
          ASSERT_EQ(signed_sum, 0);
          ASSERT_EQ(h.dot(lattice_line_vector(g, line.base, line.i, line.j)), 0);
        }
      }
    }
}

TEST(Family, SmallestEigenvalue) {
  for (int d = 2; d <= 4; ++d) {
    const long c = d * (d - 1) / 2;
    for (int n = static_cast<int>(c); n <= 8; ++n) {
      const SRGraph g(d, n);
      const auto eig = adjacency_eigenvalues(g);
      EXPECT_NEAR(eig.front(), -static_cast<double>(c), 1e-8) << d << "," << n;
      EXPECT_GE(nullity(g.shifted_adjacency(-c)), 1u);
    }
    for (int n = 1; n < c; ++n) EXPECT_GE(adjacency_eigenvalues(SRGraph(d, n)).front(), -static_cast<double>(c) - 1e-8);
  }
}

TEST(Lines, DistinctCount) {
  // each pair (i,j) contributes one line per composition of n over the other d-2 coordinates
  // plus the shared i+j value: C(n + d - 2, d - 2)
  for (int d = 2; d <= 5; ++d)
    for (int n = 0; n <= 6; ++n) {
      const auto lines = distinct_lattice_lines(d, n);
      EXPECT_EQ(lines.size(), static_cast<std::size_t>(d * (d - 1) / 2) * binomial(n + d - 2, d - 2));
      std::set<std::pair<Vertex, std::pair<int, int>>> keys;
      for (const auto& l : lines) keys.insert({l.canonical_base(), {l.i, l.j}});
      EXPECT_EQ(keys.size(), lines.size());
    }
}

TEST(Span, Examples) {
  for (int n = 1; n <= 8; ++n) {
    const auto r = span_conjecture_check(3, n);
    EXPECT_EQ(r.rank_lines, static_cast<std::size_t>(3 * n));
    EXPECT_EQ(r.num_centers, static_cast<std::size_t>((n - 1) * (n - 2) / 2));
    EXPECT_TRUE(r.rank_sum_equals_N);
  }
  for (int n = 1; n <= 8; ++n) EXPECT_TRUE(span_conjecture_check(4, n).rank_sum_equals_N) << n;
  const auto r57 = span_conjecture_check(5, 7);
  EXPECT_EQ(r57.num_centers, 0u);
  EXPECT_EQ(r57.rank_lines, r57.N);
  EXPECT_EQ(r57.verdict, "holds at (5,7)");
  EXPECT_NE(span_report_json(r57).find("\"rank_lines\":330"), std::string::npos);
}

TEST(Coverage, Values) {
  EXPECT_EQ(coverage_ratio(3, 3), Rational(1, 10));
  for (int d = 2; d <= 6; ++d)
    for (int n = 0; n < d * (d - 1) / 2; ++n) EXPECT_EQ(coverage_ratio(d, n), 0);
  const auto first = first_n_with_coverage_above(3, Rational(9, 10), 500);
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(*first, 57);
  EXPECT_EQ(coverage_ratio(3, 57), Rational(1540, 1711));
  EXPECT_LE(coverage_ratio(3, 56), Rational(9, 10));
}

#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "srg/eigenbasis3.hpp"
#include "srg/errors.hpp"
#include "srg/exact_linalg.hpp"
#include "srg/float_spectrum.hpp"
#include "srg/lattice_graph.hpp"
#include "srg/spectral_analysis.hpp"

using namespace srg;
using namespace srg::spectral;

using Table = std::map<long, std::size_t>;

TEST(Spectrum, Examples) {
  const auto s33 = integral_spectrum(SRGraph(3, 3));
  EXPECT_TRUE(s33.certified);
  EXPECT_EQ(s33.pairs, (Table{{6, 1}, {1, 3}, {0, 2}, {-2, 3}, {-3, 1}}));

  for (int d = 2; d <= 6; ++d) {
    const auto k = integral_spectrum(SRGraph(d, 1));
    EXPECT_EQ(k.pairs, (Table{{d - 1, 1}, {-1, static_cast<std::size_t>(d - 1)}}));
  }
  // Johnson graph J(5,2)
  EXPECT_EQ(integral_spectrum(SRGraph(4, 2)).pairs, (Table{{6, 1}, {1, 4}, {-2, 5}}));
  EXPECT_EQ(integral_spectrum(SRGraph(1, 4)).pairs, (Table{{0, 1}}));
}

TEST(Spectrum, ExactOnlyAgreesWithScreen) {
  for (int n = 1; n <= 5; ++n) {
    const SRGraph g(4, n);
    const auto a = integral_spectrum(g, Screen::float_screen);
    const auto b = integral_spectrum(g, Screen::exact_only);
    EXPECT_EQ(a.pairs, b.pairs);
    EXPECT_TRUE(b.certified);
    EXPECT_EQ(b.method, "exact-only");
  }
}

TEST(Spectrum, SerialAndParallelAgree) {
  const SRGraph g(3, 9);
  EXPECT_EQ(integral_spectrum(g, Screen::float_screen, Execution::serial).pairs,
            integral_spectrum(g, Screen::float_screen, Execution::parallel).pairs);
}

TEST(Spectrum, MatchesEigenbasisAndTraces) {
  for (int n = 1; n <= 15; ++n) {
    const SRGraph g(3, n);
    const auto s = integral_spectrum(g);
    ASSERT_TRUE(s.certified);
    EXPECT_EQ(s.pairs, eigen3::full_eigenbasis(n).multiplicities()) << n;
    EXPECT_TRUE(trace_identities_hold(s.pairs, g.size(), g.edge_count()));
  }
  for (int d = 4; d <= 5; ++d)
    for (int n = 1; n <= 5; ++n) {
      const SRGraph g(d, n);
      const auto s = integral_spectrum(g);
      EXPECT_TRUE(s.certified);
      EXPECT_EQ(s.total(), g.size());
      EXPECT_TRUE(trace_identities_hold(s.pairs, g.size(), g.edge_count()));
    }
}

TEST(Spectrum, TraceIdentitiesRejectBadTables) {
  EXPECT_TRUE(trace_identities_hold({{2, 1}, {-1, 2}}, 3, 3));
  EXPECT_FALSE(trace_identities_hold({{2, 1}, {-1, 1}, {0, 1}}, 3, 3));
  EXPECT_FALSE(trace_identities_hold({{2, 1}, {-1, 2}}, 3, 4));
}

TEST(Spectrum, LaplacianShift) {
  EXPECT_EQ(laplacian_spectrum({{2, 1}, {-1, 2}}, 2), (Table{{0, 1}, {3, 2}}));
}

TEST(Trees, Examples) {
  EXPECT_EQ(spanning_trees_formula(1), 3);
  EXPECT_EQ(spanning_trees_formula(2), 384);
  EXPECT_EQ(spanning_trees_matrix_tree(SRGraph(3, 1)), 3);
  EXPECT_EQ(spanning_trees_matrix_tree(SRGraph(3, 2)), 384);
  EXPECT_EQ(spanning_trees_formula(3), determinant(laplacian(SRGraph(3, 3)).without(0, 0)));
}

TEST(Trees, ThreeWayAgreement) {
  for (int n = 1; n <= 9; ++n) {
    const SRGraph g(3, n);
    const auto f = spanning_trees_formula(n);
    EXPECT_EQ(f, spanning_trees_matrix_tree(g)) << n;
    const auto lap = laplacian_spectrum(eigen3::theorem_table(n), g.degree());
    EXPECT_EQ(Rational(f), spanning_trees_from_spectrum(lap, g.size()));
  }
}

TEST(Trees, DeletedVertexDoesNotMatter) {
  for (int n = 1; n <= 5; ++n) {
    const SRGraph g(3, n);
    const auto base = spanning_trees_matrix_tree(g, 0);
    for (std::size_t v = 1; v < g.size(); v += 2) EXPECT_EQ(spanning_trees_matrix_tree(g, v), base);
  }
  EXPECT_THROW(spanning_trees_matrix_tree(SRGraph(3, 40)), ResourceError);
}

TEST(Quotient, Examples) {
  const auto q33 = quotient_matrix(SRGraph(3, 3));
  EXPECT_EQ(q33.orbits, (std::vector<Vertex>{{0, 0, 3}, {0, 1, 2}, {1, 1, 1}}));
  const auto r33 = quotient_spectrum_integral(3, 3);
  EXPECT_TRUE(r33.integral);
  EXPECT_EQ(r33.spectrum, (Table{{6, 1}, {1, 1}, {-2, 1}}));
  ASSERT_TRUE(r33.contained_in_A.has_value());
  EXPECT_TRUE(*r33.contained_in_A);

  for (int d = 2; d <= 6; ++d) {
    const auto q = quotient_matrix(SRGraph(d, 1));
    ASSERT_EQ(q.entries.rows(), 1u);
    EXPECT_EQ(q.entries(0, 0), d - 1);
  }

  const auto q32 = quotient_matrix(SRGraph(3, 2));
  ASSERT_EQ(q32.entries.rows(), 2u);
  for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(q32.entries(r, 0) + q32.entries(r, 1), 4);
}

TEST(Quotient, CombinatorialMatchesGraph) {
  for (int d = 2; d <= 5; ++d)
    for (int n = 0; n <= 7; ++n) {
      const auto a = quotient_matrix(SRGraph(d, n));
      const auto b = quotient_matrix(d, n);
      EXPECT_EQ(a.orbits, b.orbits);
      EXPECT_EQ(a.orbit_sizes, b.orbit_sizes);
      EXPECT_EQ(a.entries, b.entries);
      BigInt total = 0;
      for (const auto& s : a.orbit_sizes) total += s;
      EXPECT_EQ(total, binomial(n + d - 1, d - 1));
    }
}

TEST(Quotient, SpectrumContainedInAdjacencySpectrum) {
  for (int d = 3; d <= 4; ++d)
    for (int n = 1; n <= 7; ++n) {
      const auto r = quotient_spectrum_integral(d, n);
      ASSERT_TRUE(r.integral);
      const auto full = integral_spectrum(SRGraph(d, n)).pairs;
      for (const auto& [l, m] : r.spectrum) {
        ASSERT_TRUE(full.count(l)) << d << "," << n << " " << l;
        EXPECT_LE(m, full.at(l));
      }
      ASSERT_TRUE(r.contained_in_A.has_value());
      EXPECT_TRUE(*r.contained_in_A);
    }
}

TEST(Quotient, AnnihilatorRouteMatchesBareiss) {
  QuotientOptions mod;
  mod.bareiss_cap = 0;
  for (int n = 2; n <= 14; n += 3) {
    const auto a = quotient_spectrum_integral(4, n);
    const auto b = quotient_spectrum_integral(4, n, mod);
    EXPECT_EQ(a.spectrum, b.spectrum);
    EXPECT_EQ(b.method, "annihilator-mod-p");
    EXPECT_FALSE(b.primes.empty());
  }
}

TEST(Ratio, Examples) {
  EXPECT_EQ(ratio_bound(3, 3), Rational(10, 3));
  EXPECT_EQ(ratio_bound(4, 6), 21);
  for (int n = 3; n <= 20; ++n) {
    Rational closed(3 * (n + 2) * (n + 1), 4 * n + 6);
    closed.canonicalize();
    EXPECT_EQ(ratio_bound(3, n), closed);
  }
  EXPECT_THROW(ratio_bound(4, 5), DomainError);
}

TEST(Independence, AgainstBruteForce) {
  EXPECT_EQ(independence_number(SRGraph(3, 2)), 2);
  EXPECT_EQ(independence_number(SRGraph(3, 3)), 3);
  for (int d = 2; d <= 5; ++d) EXPECT_EQ(independence_number(SRGraph(d, 1)), 1);
  for (int d = 2; d <= 4; ++d)
    for (int n = 0; n <= 4; ++n) {
      const auto adj = oracle::adjacency(d, n);
      if (adj.size() > 20) continue;
      EXPECT_EQ(independence_number(SRGraph(d, n)), oracle::independence_brute(adj)) << d << "," << n;
    }
  EXPECT_THROW(independence_number(SRGraph(3, 20)), ResourceError);
}

TEST(Independence, BelowRatioBoundAndFloorFormula) {
  for (int n = 3; n <= 13; ++n) {
    const int a = independence_number(SRGraph(3, n));
    EXPECT_LE(Rational(a), ratio_bound(3, n));
    EXPECT_EQ(a, (2 * n + 3) / 3) << n;
  }
}

TEST(FloatSpectrum, Helpers) {
  const std::vector<double> v{-1.0000000001, 0.5, 2.0};
  EXPECT_EQ(integer_candidates(v, 1e-6), (std::vector<long>{-1, 2}));
  EXPECT_NEAR(max_integrality_gap(v), 0.5, 1e-12);
  const auto e = symmetric_eigenvalues(IntMatrix{{0, 1}, {1, 0}});
  ASSERT_EQ(e.size(), 2u);
  EXPECT_NEAR(e[0], -1, 1e-12);
  EXPECT_NEAR(e[1], 1, 1e-12);
}

TEST(Output, CsvAndJson) {
  const auto s = integral_spectrum(SRGraph(3, 3));
  std::ostringstream csv;
  write_spectrum_csv(s, 3, 3, csv);
  EXPECT_EQ(csv.str(),
            "d,n,eigenvalue,multiplicity,certified\n"
            "3,3,6,1,true\n3,3,1,3,true\n3,3,0,2,true\n3,3,-2,3,true\n3,3,-3,1,true\n");
  EXPECT_NE(spectrum_json(s, 3, 3).find("\"certified\":true"), std::string::npos);
  EXPECT_NE(quotient_report_json(quotient_spectrum_integral(3, 3)).find("coordinate-permutation"),
            std::string::npos);
}

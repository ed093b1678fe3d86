#pragma once

// Signed permutohedron vectors H_{p,w} in SR(d,n), the standard offset, the
// packing of lattice permutohedra, and the lattice-line span experiment.

#include <cstddef>
#include <optional>
#include <vector>

#include "srg/exact_linalg.hpp"
#include "srg/lattice_graph.hpp"
#include "srg/permutation.hpp"
#include "srg/sparse_vector.hpp"

namespace srg::perm {

using OffsetVector = std::vector<Rational>;

/// ((1-d)/2, (3-d)/2, ..., (d-1)/2).
OffsetVector standard_offset(int d);

struct PermutohedronSpec {
  std::vector<Rational> center;
  OffsetVector offset;
};

/// p + sigma(w), where sigma(w)_i = w_{sigma_i}. Not validated.
std::vector<Rational> permuted_point(const PermutohedronSpec& spec, const Permutation& sigma);

/// sum over sigma in S_d of sign(sigma) e_{p + sigma(w)}. Throws DomainError
/// naming every offending sigma if a point is not a vertex of g, and when the
/// offset entries are not distinct.
SparseVector permutohedron_vector(const SRGraph& g, const PermutohedronSpec& spec);

/// Centres b + (d-1)/2 * 1 for b a weak composition of n - C(d,2), with the
/// standard offset; lexicographic in b.
std::vector<PermutohedronSpec> enumerate_centers(int d, int n);

/// C(n - (d-1)(d-2)/2, d-1), zero when n < C(d,2).
std::uint64_t center_count(int d, int n);

struct FamilyCheck {
  std::size_t count = 0;
  std::size_t failures = 0;  // vectors with A v != -C(d,2) v
};

/// Builds the permutohedron vector of every centre and checks the eigenvalue
/// relation exactly.
FamilyCheck verify_permutohedron_family(const SRGraph& g, Execution exec = Execution::parallel);

/// Distinct lattice lines (characteristic vectors) of SR(d,n).
std::vector<LatticeLine> distinct_lattice_lines(int d, int n);

struct SpanReport {
  int d = 0;
  int n = 0;
  std::size_t N = 0;
  std::size_t num_lines = 0;
  std::size_t num_centers = 0;
  std::size_t rank_lines = 0;
  bool rank_sum_equals_N = false;
  std::string verdict;  // "holds at (d,n)" or "fails at (d,n)"
};

SpanReport span_conjecture_check(int d, int n, std::size_t vertex_cap = default_vertex_cap(),
                                 Execution exec = Execution::parallel);

/// Exact rank of the permutohedron vectors of all centres.
std::size_t permutohedron_family_rank(const SRGraph& g, Execution exec = Execution::parallel);

/// #centres / N as an exact rational.
Rational coverage_ratio(int d, int n);

/// First n in [1, n_max] with coverage_ratio(d, n) > threshold.
std::optional<int> first_n_with_coverage_above(int d, const Rational& threshold, int n_max);

std::string span_report_json(const SpanReport& r);

}  // namespace srg::perm

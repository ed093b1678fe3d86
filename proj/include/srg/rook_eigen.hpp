#pragma once

// Inversion words, skyline rook placements and the F_pi eigenvectors of
// eigenvalue -n in SR(d,n) for n < C(d,2).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "srg/exact_linalg.hpp"
#include "srg/lattice_graph.hpp"
#include "srg/permutation.hpp"
#include "srg/sparse_vector.hpp"

namespace srg::rook {

/// a_i = #{j > i : pi_i > pi_j}.
Vertex inversion_word(const Permutation& pi);

/// Number of permutations of d letters with n inversions.
BigInt mahonian(int d, int n);
/// Row M(d, 0..C(d,2)).
std::vector<BigInt> mahonian_row(int d);

/// S_{d,n}: permutations of d letters with n inversions, lexicographic.
std::vector<Permutation> permutations_with_inversions(int d, int n);

struct SkylineBoard {
  std::vector<int> column_heights;
  /// One rook per column at row sigma_i, rows distinct, inside the board.
  bool admits(const Permutation& sigma) const;
};

/// Sky(a_1 + 1, ..., a_d + d) for a = a(pi).
SkylineBoard skyline_board(const Permutation& pi);

struct PartialPermutohedron {
  Permutation pi;
  Vertex word;                          // a(pi)
  std::vector<Permutation> admissible;  // lexicographic
  std::vector<Vertex> points;           // x(sigma) = a + id - sigma, same order
  bool injective = true;                // sigma -> x(sigma) has no collisions
};

PartialPermutohedron admissible_set(const Permutation& pi);

/// sum over sigma in Adm(pi) of sign(sigma) e_{x(sigma)}. MismatchError when
/// pi does not have exactly n inversions; ConsistencyError if two admissible
/// permutations land on the same point.
SparseVector f_vector(const SRGraph& g, const Permutation& pi);

struct MahonianOptions {
  std::size_t vertex_cap = 20000;
  /// Above this N the exact nullity is only attempted modulo a prime.
  std::size_t modular_cap = 1300;
  /// Dense Bareiss fallback when the modular bound is not tight.
  std::size_t bareiss_cap = 800;
  /// Float minimum eigenvalue is skipped above this N.
  std::size_t float_cap = 1500;
  Execution exec = Execution::parallel;
};

struct MahonianReport {
  int d = 0;
  int n = 0;
  std::size_t N = 0;
  BigInt mahonian;
  std::size_t num_vectors = 0;
  bool all_eigenvectors = false;
  bool leading_terms_distinct = false;
  std::size_t rank = 0;
  std::optional<std::size_t> exact_nullity;
  std::string nullity_method;  // "rank-squeeze-mod-p", "bareiss" or "skipped"
  std::optional<double> min_eig_float;
  bool min_eig_is_minus_n = false;
  bool passed() const;
};

MahonianReport mahonian_eigenspace_check(int d, int n, const MahonianOptions& opt = {});

struct InducedReport {
  Permutation pi;
  int n = 0;
  std::vector<std::size_t> vertices;  // parent-graph indices
  bool regular = false;
  bool laplacian_integral = false;
  bool discrepancy = false;  // a float-integral value refuted by exact nullity
  std::map<long, std::size_t> laplacian_spectrum;  // filled when integral
  std::size_t distinct_eigs = 0;
  double max_float_gap = 0.0;
};

InducedReport induced_subgraph_check(const SRGraph& g, const Permutation& pi,
                                     Execution exec = Execution::parallel);

std::string mahonian_report_json(const MahonianReport& r);
std::string induced_report_json(const InducedReport& r);

}  // namespace srg::rook

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "srg/vertex.hpp"

namespace srg {

class SRGraph;

using Coeff = std::int64_t;

/// Overflow-checked coefficient arithmetic; throws OverflowError.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/// Exact integer vector on the vertex set of SR(d,n), stored as entries
/// sorted by lexicographic vertex index with no explicit zeros.
class SparseVector {
 public:
  struct Entry {
    std::uint32_t index;
    Coeff value;
    bool operator==(const Entry&) const = default;
  };

  SparseVector(int d, int n);
  /// Entries may be unsorted and repeated; they are merged and zeros dropped.
  SparseVector(int d, int n, std::vector<Entry> entries);

  int d() const { return d_; }
  int n() const { return n_; }
  const LatticeIndex& lattice() const { return *index_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Coeff at(std::size_t index) const;
  Coeff at(const Vertex& x) const;

  /// Adds c * e_x.
  void add(const Vertex& x, Coeff c);
  void add_index(std::size_t index, Coeff c);

  SparseVector& operator+=(const SparseVector& o);
  SparseVector& operator-=(const SparseVector& o);
  SparseVector& operator*=(Coeff c);
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(Coeff c, SparseVector a) { return a *= c; }
  SparseVector operator-() const;
  bool operator==(const SparseVector& o) const;

  /// Euclidean inner product (exact).
  Coeff dot(const SparseVector& o) const;

  /// Lexicographically smallest / largest vertex in the support, as a vertex
  /// index. Requires a nonzero vector.
  std::size_t lex_min_index() const;
  std::size_t lex_max_index() const;

  /// Image under the coordinate permutation `perm` (0-based): the coefficient
  /// at x moves to y with y[perm[i]] = x[i].
  SparseVector permute_coordinates(std::span<const int> perm) const;

  /// Dense copy of length dimension().
  std::vector<Coeff> dense() const;
  /// Inverse of dense().
  static SparseVector from_dense(int d, int n, std::span<const Coeff> values);

  /// [(vertex, coefficient), ...] in lexicographic order.
  std::vector<std::pair<Vertex, Coeff>> support() const;

  std::string str() const;

 private:
  void check_same_space(const SparseVector& o) const;
  void merge(const SparseVector& o, Coeff sign);

  int d_;
  int n_;
  std::shared_ptr<const LatticeIndex> index_;
  std::size_t dimension_;
  std::vector<Entry> entries_;
};

/// Exact product A(SR(d,n)) * v. Small supports are scattered through the
/// neighbour lists; large supports use the row-gather kernel.
SparseVector apply_adjacency(const SRGraph& g, const SparseVector& v);

/// True iff A v == lambda v exactly.
bool is_eigenvector(const SRGraph& g, const SparseVector& v, Coeff lambda);

/// Reusable scatter workspace for verifying many small eigenvector
/// candidates against one graph (e.g. every permutohedron vector).
class AdjacencyWorkspace {
 public:
  explicit AdjacencyWorkspace(const SRGraph& g);
  SparseVector apply(const SparseVector& v);
  bool is_eigenvector(const SparseVector& v, Coeff lambda);

 private:
  const SRGraph& g_;
  std::vector<Coeff> acc_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace srg
